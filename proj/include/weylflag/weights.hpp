#pragma once

#include "weylflag/perm.hpp"
#include "weylflag/qlinalg.hpp"
#include "weylflag/rational.hpp"

namespace weylflag {

// A rational weight per embedding: entry(tau, i) with tau = 1..sigma, i = 1..n.
// Entries are rational because the special weight is half-integral for even n.
class WeightVector {
public:
    WeightVector() = default;
    WeightVector(int sigma, int n) : n_(n), rows_(sigma, QVec(n, Rat(0))) {
        if (sigma < 1 || n < 1) throw std::invalid_argument("bad weight shape");
    }
    explicit WeightVector(std::vector<QVec> rows);

    int sigma() const { return static_cast<int>(rows_.size()); }
    int n() const { return n_; }
    Rat& entry(int tau, int i) { return rows_[tau - 1][i - 1]; }  // 1-based
    const Rat& entry(int tau, int i) const { return rows_[tau - 1][i - 1]; }
    const std::vector<QVec>& rows() const { return rows_; }

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    bool operator==(const WeightVector& o) const = default;
    bool operator<(const WeightVector& o) const { return rows_ < o.rows_; }

    std::string to_string() const;  // compact "a,b;c,d" with "p/q" entries
    static WeightVector parse(const std::string& s, int sigma = -1, int n = -1);

private:
    int n_ = 0;
    std::vector<QVec> rows_;
};

// The weight with entry(tau, i) = (n+1)/2 - i; half the sum of positive roots
// shifted to the standard coordinates.
WeightVector special_weight(int n, int sigma);

// w(lambda): entry(tau, i) = lambda(tau, w_tau^{-1}(i)).
WeightVector apply(const MultiPermutation& w, const WeightVector& lam);

// Dot action w . lambda = w(lambda + pi) - pi, evaluated in closed form
// entry(tau, i) = lambda(tau, winv(i)) + i - winv(i).
WeightVector dot_action(const MultiPermutation& w, const WeightVector& lam);

// Same action through the literal shift-conjugate definition; retained as the
// cross-check form, tested to agree with the closed form.
WeightVector dot_action_shift_form(const MultiPermutation& w, const WeightVector& lam);

// Single-permutation conveniences (sigma = 1).
WeightVector dot_action(const Permutation& w, const QVec& lam);

// Dominance order: true iff lambda - mu is a sum of simple roots with
// non-negative integer coefficients, i.e. all prefix sums of the difference are
// non-negative integers and each tau-row of the difference sums to zero.
bool weight_leq(const WeightVector& mu, const WeightVector& lam);
bool weight_lt(const WeightVector& mu, const WeightVector& lam);

}  // namespace weylflag
