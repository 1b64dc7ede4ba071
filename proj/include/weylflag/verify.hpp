#pragma once

#include <string>
#include <vector>

namespace weylflag {

// One acceptance sweep: pass covers both the checked property and the sweep's
// runtime budget.  detail carries the counts that make a failure actionable.
struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long millis = 0;

    std::string line() const;  // "PASS  3 flag-lemma ... (123 ms)"
};

CheckResult check_census();                      // n <= 4 censuses + frozen bad pair
CheckResult check_tangent_oracle();              // combinatorial == Jacobian rank, n <= 4
CheckResult check_flag_lemma(unsigned seed);     // subquotient test <=> open-cell solve
CheckResult check_eigen(unsigned seed);          // eigen_basis diagonalizes; Bezout identities
CheckResult check_linkage(unsigned seed);        // companion linkage over all good pairs
CheckResult check_formula();                     // w = wsat and w = w0 degenerations
CheckResult check_bruhat();                      // Ehresmann == subword oracle, n <= 5

// All sweeps in criterion order.  names: census, tangent, flag-lemma, eigen,
// linkage, formula, bruhat.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed);

}  // namespace weylflag
