#pragma once

#include <optional>
#include <utility>

#include "weylflag/perm.hpp"

namespace weylflag {

// Witness for a good pair: replaying the chain from start by left
// multiplication (t_{i_1 j_1} first) reproduces end, every step strictly
// increases Bruhat order, and every {i_k, j_k} lies in one orbit of
// start . end^{-1} restricted to its tau component.
struct GoodPairCertificate {
    std::vector<Root> chain;
    MultiPermutation start;
    MultiPermutation end;
};

struct GoodPairResult {
    bool good = false;
    std::optional<GoodPairCertificate> certificate;
};

// Cycles of p as sorted index sets covering {1..n} (fixed points included).
std::vector<std::vector<int>> orbits(const Permutation& p);

// Decides whether (w1, w2) is a good pair: w2 reachable from w1 by left
// multiplications with transpositions t_ij, {i,j} inside a single orbit of
// w1 . w2^{-1}, each step strictly Bruhat-increasing.  Breadth-first search
// from w1 over that fixed transposition set, pruning states not below w2,
// depth capped by length(w2) - length(w1).
GoodPairResult is_good_pair(const Permutation& w1, const Permutation& w2);

// Componentwise check with early exit; certificate chains carry tau tags.
GoodPairResult is_good_pair_multi(const MultiPermutation& w1, const MultiPermutation& w2);

struct CensusReport {
    int n = 0;
    int sigma = 0;
    long long comparable_pairs = 0;
    long long good = 0;
    long long bad = 0;
    std::vector<std::pair<MultiPermutation, MultiPermutation>> bad_pairs;
};

// Enumerates all Bruhat-comparable pairs of (S_n)^sigma and classifies them.
// Multi pairs are classified from the single-pair table (goodness is
// componentwise), so sigma > 1 costs no extra searches.
CensusReport census(int n, int sigma, int bound = 5);

}  // namespace weylflag
