#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylflag {

// Enumeration bounds and sweep knobs, settable by flags, a config file
// (--config, same names), and the WEYLFLAG_WORKERS environment variable.
struct RunConfig {
    int max_n = 5;         // census / table enumeration bound
    int max_oracle_n = 4;  // Jacobian-rank sweeps
    int max_sigma = 2;
    unsigned seed = 12345;
    int workers = 1;
    std::string format = "json";
    bool oracle = false;
    bool override_nongood = false;
};

// Dispatches one invocation.  Exit 0 on success (result on out), 1 on domain
// errors (structured JSON error object on out), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylflag
