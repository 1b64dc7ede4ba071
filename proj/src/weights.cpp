#include "weylflag/weights.hpp"

#include <sstream>

namespace weylflag {

WeightVector::WeightVector(std::vector<QVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].empty()) throw std::invalid_argument("bad weight shape");
    n_ = static_cast<int>(rows_[0].size());
    for (const QVec& r : rows_)
        if (static_cast<int>(r.size()) != n_)
            throw std::invalid_argument("ragged weight rows");
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    if (sigma() != o.sigma() || n_ != o.n_) throw std::invalid_argument("weight shape mismatch");
    WeightVector out = *this;
    for (int t = 0; t < sigma(); ++t)
        for (int i = 0; i < n_; ++i) out.rows_[t][i] += o.rows_[t][i];
    return out;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    if (sigma() != o.sigma() || n_ != o.n_) throw std::invalid_argument("weight shape mismatch");
    WeightVector out = *this;
    for (int t = 0; t < sigma(); ++t)
        for (int i = 0; i < n_; ++i) out.rows_[t][i] -= o.rows_[t][i];
    return out;
}

std::string WeightVector::to_string() const {
    std::vector<std::string> rows;
    for (const QVec& r : rows_) {
        std::vector<std::string> parts;
        for (const Rat& x : r) parts.push_back(rat_str(x));
        rows.push_back(join(parts, ","));
    }
    return join(rows, ";");
}

WeightVector WeightVector::parse(const std::string& s, int sigma, int n) {
    std::vector<QVec> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        QVec r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) r.push_back(parse_rat(tok));
        rows.push_back(r);
    }
    WeightVector w(rows);
    if (sigma > 0 && w.sigma() != sigma)
        throw std::invalid_argument("expected " + std::to_string(sigma) + " weight rows");
    if (n > 0 && w.n() != n)
        throw std::invalid_argument("expected weight rows of size " + std::to_string(n));
    return w;
}

WeightVector special_weight(int n, int sigma) {
    WeightVector out(sigma, n);
    for (int t = 1; t <= sigma; ++t)
        for (int i = 1; i <= n; ++i) out.entry(t, i) = make_rat(n + 1 - 2 * i, 2);
    return out;
}

WeightVector apply(const MultiPermutation& w, const WeightVector& lam) {
    if (w.sigma() != lam.sigma() || w.n() != lam.n())
        throw std::invalid_argument("permutation/weight shape mismatch");
    WeightVector out(lam.sigma(), lam.n());
    for (int t = 1; t <= lam.sigma(); ++t) {
        Permutation inv = w.comp(t).inverse();
        for (int i = 1; i <= lam.n(); ++i) out.entry(t, i) = lam.entry(t, inv(i));
    }
    return out;
}

WeightVector dot_action(const MultiPermutation& w, const WeightVector& lam) {
    if (w.sigma() != lam.sigma() || w.n() != lam.n())
        throw std::invalid_argument("permutation/weight shape mismatch");
    WeightVector out(lam.sigma(), lam.n());
    for (int t = 1; t <= lam.sigma(); ++t) {
        Permutation inv = w.comp(t).inverse();
        for (int i = 1; i <= lam.n(); ++i)
            out.entry(t, i) = lam.entry(t, inv(i)) + (i - inv(i));
    }
    return out;
}

WeightVector dot_action_shift_form(const MultiPermutation& w, const WeightVector& lam) {
    WeightVector pi = special_weight(lam.n(), lam.sigma());
    return apply(w, lam + pi) - pi;
}

WeightVector dot_action(const Permutation& w, const QVec& lam) {
    return dot_action(MultiPermutation({w}), WeightVector({lam}));
}

bool weight_leq(const WeightVector& mu, const WeightVector& lam) {
    if (mu.sigma() != lam.sigma() || mu.n() != lam.n())
        throw std::invalid_argument("weight shape mismatch");
    for (int t = 1; t <= mu.sigma(); ++t) {
        Rat prefix(0);
        for (int i = 1; i <= mu.n(); ++i) {
            prefix += lam.entry(t, i) - mu.entry(t, i);
            if (!is_integer(prefix) || prefix < 0) return false;
        }
        if (prefix != 0) return false;
    }
    return true;
}

bool weight_lt(const WeightVector& mu, const WeightVector& lam) {
    return !(mu == lam) && weight_leq(mu, lam);
}

}  // namespace weylflag
