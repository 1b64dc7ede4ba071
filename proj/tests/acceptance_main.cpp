// Acceptance gate: every sweep in criterion order, one line each, exit 0 only
// if all pass.  Same code path as `weylflag verify --suite all`.
#include <iostream>

#include "weylflag/verify.hpp"

int main() {
    auto results = weylflag::run_suite("all", 12345);
    bool all = true;
    for (const auto& r : results) {
        std::cout << r.line() << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << " (" << results.size()
              << " criteria)\n";
    return all ? 0 : 1;
}
