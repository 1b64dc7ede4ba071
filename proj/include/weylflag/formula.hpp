#pragma once

#include <optional>

#include "weylflag/good_pairs.hpp"
#include "weylflag/weights.hpp"

namespace weylflag {

// Regular Hodge-Tate-type weights: one strictly increasing integer n-tuple per
// embedding tau.
class HodgeTateWeights {
public:
    explicit HodgeTateWeights(std::vector<std::vector<long>> values);

    int sigma() const { return static_cast<int>(v_.size()); }
    int n() const { return v_.empty() ? 0 : static_cast<int>(v_[0].size()); }
    long value(int tau, int i) const { return v_[tau - 1][i - 1]; }  // 1-based
    const std::vector<std::vector<long>>& values() const { return v_; }

    WeightVector as_weights() const;
    std::string to_string() const;  // "0,1,2;0,2,5"
    static HodgeTateWeights parse(const std::string& s);

private:
    std::vector<std::vector<long>> v_;
};

// Continuous-character parameter: integer exponents k per (tau, i), symbolic
// unit labels phi (pairwise distinct; the genericity hypothesis is a symbolic
// flag, the labels are never evaluated), optional rational weights for the
// smooth part.
struct CharacterParam {
    std::vector<std::vector<long>> k;
    std::vector<std::string> phi;
    std::optional<WeightVector> chi_weights;

    void validate() const;
};

struct PerTauTerm {
    int tau = 0;
    int tangent_dim = 0;
    int length_w = 0;
    int length_wsat = 0;
};

struct FormulaReport {
    int n = 0;
    int sigma = 0;
    long long dim_xtri = 0;
    long long d_term = 0;
    long long schubert_sum = 0;
    long long length_term = 0;
    long long total = 0;  // dim_xtri - d_term + schubert_sum - length_term
    bool good_pair = false;
    bool conjectural = false;  // set when computed past a non-good pair
    std::vector<PerTauTerm> per_tau;
};

// n^2 + sigma * n(n+1)/2.
long long dim_xtri(int n, int sigma);

// Rank of the subgroup of Z^{sigma n} generated by { w'(alpha) - alpha } over
// the roots alpha of the product system (equal to the Q-rank of the stacked
// generator matrix).
int d_invariant(const MultiPermutation& wp);

// The companion weight-space equations:
//   eta(tau, wsat(i)) - eta(tau, w(i)) = h(tau, i) - h(tau, wsat^{-1} w (i)).
bool companion_weight_space_member(const WeightVector& eta_weights, const MultiPermutation& w,
                                   const MultiPermutation& wsat, const HodgeTateWeights& h);

// w(h): entry (tau, i) = h(tau, w_tau^{-1}(i)).
std::vector<std::vector<long>> apply_perm_to_weights(const MultiPermutation& w, const HodgeTateWeights& h);

// The twist moving the saturated parameter to the companion one: adds
// w(h) - wsat(h) to the algebraic exponents, phi untouched.
CharacterParam jmath_twist(const CharacterParam& c, const MultiPermutation& w,
                           const MultiPermutation& wsat, const HodgeTateWeights& h);

struct LinkageResult {
    bool linked = false;
    // Dot-reflection roots applied from lam downward; replaying
    // nu_k = s_{chain[k]} . nu_{k-1} from nu_0 = lam descends strictly to mu.
    std::vector<Root> chain;
};

// Strong linkage mu up-arrow lam: a chain of dot-reflections from lam down to
// mu, each step strictly decreasing in dominance order.  BFS over the finite
// dot orbit, independently per tau.  Requires lam - mu integral.
LinkageResult strongly_linked(const WeightVector& mu, const WeightVector& lam);

// Builds lam(tau, i) = h(tau, i) + (i - 1) + chi(tau, w_tau(i)) and decides
// strongly_linked(wsat . lam, w . lam).  chi must be constant on the orbits of
// w wsat^{-1} per tau.
LinkageResult companion_linkage_check(const MultiPermutation& w, const MultiPermutation& wsat,
                                      const HodgeTateWeights& h, const WeightVector& chi_weights);

// Right-hand side of the tangent-dimension formula:
//   dim_xtri - d_invariant(w wsat^{-1}) + sum_tau tangent(w_tau, wsat_tau) - length(wsat).
// Requires wsat Bruhat-below w; a non-good pair is an error unless
// override_nongood, in which case the report is labeled conjectural.
FormulaReport main_formula(int n, int sigma, const MultiPermutation& w, const MultiPermutation& wsat,
                           const HodgeTateWeights& h, bool override_nongood = false);

}  // namespace weylflag
