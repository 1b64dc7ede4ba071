#include "weylflag/artin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylflag {

namespace {

void check_same_alg(const AlgPtr& a, const AlgPtr& b) {
    if (!a || !b) throw std::invalid_argument("uninitialized algebra element");
    if (a == b || a->same(*b)) return;
    throw std::invalid_argument("mixing elements of different algebras: " + a->name() + " vs " + b->name());
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(std::vector<std::string> gens, std::vector<int> trunc)
    : gens_(std::move(gens)), trunc_(std::move(trunc)) {
    if (gens_.size() != trunc_.size())
        throw std::invalid_argument("generator/truncation count mismatch");
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].empty() || !std::isalpha(static_cast<unsigned char>(gens_[i][0])))
            throw std::invalid_argument("bad generator name");
        if (trunc_[i] < 2) throw std::invalid_argument("truncation exponent must be >= 2");
        for (size_t j = 0; j < i; ++j)
            if (gens_[i] == gens_[j]) throw std::invalid_argument("duplicate generator name");
    }
    // Monomial basis: all exponent tuples below the truncations, ordered by
    // total degree then lexicographically.
    std::vector<std::vector<int>> tuples{{std::vector<int>(gens_.size(), 0)}};
    for (size_t g = 0; g < gens_.size(); ++g) {
        std::vector<std::vector<int>> grown;
        for (const auto& t : tuples)
            for (int e = 0; e < trunc_[g]; ++e) {
                auto u = t;
                u[g] = e;
                grown.push_back(u);
            }
        tuples = std::move(grown);
    }
    auto deg = [](const std::vector<int>& t) {
        int d = 0;
        for (int e : t) d += e;
        return d;
    };
    std::sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
        if (deg(a) != deg(b)) return deg(a) < deg(b);
        return a < b;
    });
    basis_ = std::move(tuples);

    int d = dim();
    mul_.assign(static_cast<size_t>(d) * d, -1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<int> s(gens_.size());
            bool alive = true;
            for (size_t g = 0; g < gens_.size(); ++g) {
                s[g] = basis_[i][g] + basis_[j][g];
                if (s[g] >= trunc_[g]) alive = false;
            }
            if (alive) mul_[static_cast<size_t>(i) * d + j] = mono_index(s);
        }
}

AlgPtr TruncatedAlgebra::rationals() {
    return std::make_shared<TruncatedAlgebra>(std::vector<std::string>{}, std::vector<int>{});
}

AlgPtr TruncatedAlgebra::truncated(const std::string& gen, int m) {
    return std::make_shared<TruncatedAlgebra>(std::vector<std::string>{gen}, std::vector<int>{m});
}

AlgPtr TruncatedAlgebra::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "Q" || s == "q") return rationals();
    std::vector<std::string> gens;
    std::vector<int> trunc;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos || caret == 0)
            throw std::invalid_argument("bad algebra spec (want gen^power): " + spec);
        gens.push_back(tok.substr(0, caret));
        try {
            trunc.push_back(std::stoi(tok.substr(caret + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad algebra spec power: " + spec);
        }
    }
    return std::make_shared<TruncatedAlgebra>(gens, trunc);
}

int TruncatedAlgebra::mono_index(const std::vector<int>& expo) const {
    for (size_t g = 0; g < gens_.size(); ++g)
        if (expo[g] < 0 || expo[g] >= trunc_[g]) return -1;
    auto it = std::find(basis_.begin(), basis_.end(), expo);
    return it == basis_.end() ? -1 : static_cast<int>(it - basis_.begin());
}

std::string TruncatedAlgebra::mono_str(int idx) const {
    const std::vector<int>& t = basis_[idx];
    std::vector<std::string> parts;
    for (size_t g = 0; g < gens_.size(); ++g) {
        if (t[g] == 0) continue;
        parts.push_back(t[g] == 1 ? gens_[g] : gens_[g] + "^" + std::to_string(t[g]));
    }
    return parts.empty() ? "1" : join(parts, "*");
}

std::string TruncatedAlgebra::name() const {
    if (gens_.empty()) return "Q";
    std::vector<std::string> parts;
    for (size_t g = 0; g < gens_.size(); ++g)
        parts.push_back(gens_[g] + "^" + std::to_string(trunc_[g]));
    return join(parts, ",");
}

AlgElem::AlgElem(AlgPtr alg, QVec coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (!alg_ || static_cast<int>(c_.size()) != alg_->dim())
        throw std::invalid_argument("algebra element coefficient count mismatch");
}

AlgElem AlgElem::zero(const AlgPtr& alg) { return AlgElem(alg, QVec(alg->dim(), Rat(0))); }

AlgElem AlgElem::one(const AlgPtr& alg) { return constant(alg, Rat(1)); }

AlgElem AlgElem::constant(const AlgPtr& alg, const Rat& r) {
    QVec c(alg->dim(), Rat(0));
    c[0] = r;
    return AlgElem(alg, c);
}

AlgElem AlgElem::generator(const AlgPtr& alg, int k) {
    if (k < 0 || k >= alg->ngens()) throw std::invalid_argument("no such generator");
    std::vector<int> expo(alg->ngens(), 0);
    expo[k] = 1;
    QVec c(alg->dim(), Rat(0));
    c[alg->mono_index(expo)] = 1;
    return AlgElem(alg, c);
}

bool AlgElem::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    check_same_alg(alg_, o.alg_);
    QVec c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return AlgElem(alg_, c);
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
    check_same_alg(alg_, o.alg_);
    QVec c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return AlgElem(alg_, c);
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
    check_same_alg(alg_, o.alg_);
    QVec c(c_.size(), Rat(0));
    int d = alg_->dim();
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            int t = alg_->mul_table(i, j);
            if (t >= 0) c[t] += c_[i] * o.c_[j];
        }
    }
    return AlgElem(alg_, c);
}

AlgElem AlgElem::operator-() const {
    QVec c = c_;
    for (Rat& x : c) x = -x;
    return AlgElem(alg_, c);
}

AlgElem AlgElem::scaled(const Rat& r) const {
    QVec c = c_;
    for (Rat& x : c) x *= r;
    return AlgElem(alg_, c);
}

AlgElem AlgElem::inverse() const {
    if (!is_unit()) throw DomainError("inverting a non-unit: " + to_string());
    // a = r (1 - m) with m nilpotent; a^{-1} = r^{-1} sum m^k.
    Rat rinv = 1 / c_[0];
    AlgElem m = AlgElem::one(alg_) - scaled(rinv);
    AlgElem acc = AlgElem::one(alg_);
    AlgElem term = AlgElem::one(alg_);
    while (true) {
        term = term * m;
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc.scaled(rinv);
}

bool AlgElem::operator==(const AlgElem& o) const {
    check_same_alg(alg_, o.alg_);
    return c_ == o.c_;
}

std::string AlgElem::to_string() const {
    std::string out;
    for (int i = 0; i < alg_->dim(); ++i) {
        Rat c = c_[i];
        if (i == 0) {
            out = rat_str(c);
            continue;
        }
        bool neg = c < 0;
        out += neg ? " - " : " + ";
        out += rat_str(neg ? Rat(-c) : c) + "*" + alg_->mono_str(i);
    }
    return out;
}

AlgElem AlgElem::parse(const AlgPtr& alg, const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty algebra element literal");

    QVec coeffs(alg->dim(), Rat(0));
    size_t pos = 0;
    bool first = true;
    while (pos < t.size()) {
        int sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            sign = t[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected +/- between terms: " + s);
        }
        first = false;
        size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        std::string term = t.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw std::invalid_argument("empty term in: " + s);

        Rat coeff = sign;
        std::vector<int> expo(alg->ngens(), 0);
        std::stringstream fs(term);
        std::string factor;
        while (std::getline(fs, factor, '*')) {
            if (factor.empty()) throw std::invalid_argument("empty factor in: " + s);
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                coeff *= parse_rat(factor);
                continue;
            }
            std::string name = factor;
            int power = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
                name = factor.substr(0, caret);
                try {
                    power = std::stoi(factor.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad power in: " + s);
                }
                if (power < 1) throw std::invalid_argument("bad power in: " + s);
            }
            auto it = std::find(alg->gens().begin(), alg->gens().end(), name);
            if (it == alg->gens().end())
                throw std::invalid_argument("unknown generator '" + name + "' in: " + s);
            expo[it - alg->gens().begin()] += power;
        }
        // A monomial at or past the truncation is zero in the algebra.
        int idx = alg->mono_index(expo);
        if (idx >= 0) coeffs[idx] += coeff;
    }
    return AlgElem(alg, coeffs);
}

ArtinMatrix::ArtinMatrix(AlgPtr alg, int rows, int cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, AlgElem::zero(alg_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("bad matrix shape");
}

ArtinMatrix ArtinMatrix::identity(const AlgPtr& alg, int n) {
    ArtinMatrix m(alg, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = AlgElem::one(alg);
    return m;
}

ArtinMatrix ArtinMatrix::from_rational(const AlgPtr& alg, const QMat& q) {
    ArtinMatrix m(alg, q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j) m.at(i, j) = AlgElem::constant(alg, q.at(i, j));
    return m;
}

ArtinMatrix ArtinMatrix::operator+(const ArtinMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ArtinMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

ArtinMatrix ArtinMatrix::operator-(const ArtinMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ArtinMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

ArtinMatrix ArtinMatrix::operator*(const ArtinMatrix& o) const {
    check_same_alg(alg_, o.alg_);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    ArtinMatrix m(alg_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        }
    return m;
}

ArtinMatrix ArtinMatrix::scaled(const AlgElem& s) const {
    ArtinMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

bool ArtinMatrix::operator==(const ArtinMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

bool ArtinMatrix::is_zero() const {
    for (const AlgElem& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

ArtinMatrix ArtinMatrix::columns(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
        throw std::invalid_argument("column slice out of range");
    ArtinMatrix m(alg_, rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) m.at(i, j) = at(i, first + j);
    return m;
}

QMat ArtinMatrix::residue() const {
    QMat q(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) q.at(i, j) = at(i, j).residue();
    return q;
}

QMat ArtinMatrix::expand() const {
    int d = alg_->dim();
    QMat q(rows_ * d, cols_ * d);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const QVec& c = at(i, j).coeffs();
            for (int m = 0; m < d; ++m) {
                if (c[m] == 0) continue;
                for (int b = 0; b < d; ++b) {
                    int t = alg_->mul_table(m, b);
                    if (t >= 0) q.at(i * d + t, j * d + b) += c[m];
                }
            }
        }
    return q;
}

bool ArtinMatrix::is_invertible() const {
    if (rows_ != cols_) return false;
    return rank(residue()) == rows_;
}

ArtinMatrix ArtinMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverting a non-square matrix");
    ArtinMatrix aug = *this;
    ArtinMatrix inv = identity(alg_, rows_);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int i = col; i < rows_; ++i)
            if (aug.at(i, col).is_unit()) { p = i; break; }
        if (p < 0) throw DomainError("matrix not invertible over the local algebra");
        if (p != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(aug.at(p, j), aug.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        AlgElem piv_inv = aug.at(col, col).inverse();
        for (int j = 0; j < cols_; ++j) {
            aug.at(col, j) = aug.at(col, j) * piv_inv;
            inv.at(col, j) = inv.at(col, j) * piv_inv;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col || aug.at(i, col).is_zero()) continue;
            AlgElem f = aug.at(i, col);
            for (int j = 0; j < cols_; ++j) {
                aug.at(i, j) = aug.at(i, j) - f * aug.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

AlgElem ArtinMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return AlgElem::one(alg_);
    if (rows_ == 1) return at(0, 0);
    AlgElem acc = AlgElem::zero(alg_);
    for (int i = 0; i < rows_; ++i) {
        if (at(i, 0).is_zero()) continue;
        ArtinMatrix minor(alg_, rows_ - 1, cols_ - 1);
        for (int r = 0, mr = 0; r < rows_; ++r) {
            if (r == i) continue;
            for (int c = 1; c < cols_; ++c) minor.at(mr, c - 1) = at(r, c);
            ++mr;
        }
        AlgElem term = at(i, 0) * minor.det();
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<AlgElem> ArtinMatrix::apply(const std::vector<AlgElem>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply shape mismatch");
    std::vector<AlgElem> out(rows_, AlgElem::zero(alg_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

QVec flatten(const std::vector<AlgElem>& v) {
    if (v.empty()) return {};
    int d = v[0].alg()->dim();
    QVec out;
    out.reserve(v.size() * d);
    for (const AlgElem& x : v)
        for (int b = 0; b < d; ++b) out.push_back(x.coeff(b));
    return out;
}

std::vector<AlgElem> unflatten(const AlgPtr& alg, const QVec& flat) {
    int d = alg->dim();
    if (flat.size() % d != 0) throw std::invalid_argument("unflatten length mismatch");
    std::vector<AlgElem> out;
    for (size_t i = 0; i < flat.size(); i += d)
        out.emplace_back(alg, QVec(flat.begin() + i, flat.begin() + i + d));
    return out;
}

std::optional<std::vector<AlgElem>> solve_alg(const ArtinMatrix& m, const std::vector<AlgElem>& y) {
    auto x = solve(m.expand(), flatten(y));
    if (!x) return std::nullopt;
    return unflatten(m.alg(), *x);
}

ArtinMatrix kernel_qbasis(const ArtinMatrix& m) {
    QMat k = kernel_basis(m.expand());
    int d = m.alg()->dim();
    ArtinMatrix out(m.alg(), m.cols(), k.cols);
    for (int c = 0; c < k.cols; ++c) {
        QVec flat(k.rows);
        for (int i = 0; i < k.rows; ++i) flat[i] = k.at(i, c);
        std::vector<AlgElem> v = unflatten(m.alg(), flat);
        for (int i = 0; i < m.cols(); ++i) out.at(i, c) = v[i];
    }
    (void)d;
    return out;
}

ArtinMatrix min_generators(const ArtinMatrix& qspan) {
    const AlgPtr& alg = qspan.alg();
    int d = alg->dim();
    int r = qspan.rows();
    // mK spanned by g * v for nonconstant monomials g and the given spanning
    // vectors v; a column enters the generating set iff it grows the rank of
    // [mK | chosen].
    std::vector<AlgElem> monos;
    for (int b = 1; b < d; ++b) {
        QVec c(d, Rat(0));
        c[b] = 1;
        monos.emplace_back(alg, c);
    }
    QMat mk(r * d, 0);
    for (int c = 0; c < qspan.cols(); ++c) {
        std::vector<AlgElem> v(r, AlgElem::zero(alg));
        for (int i = 0; i < r; ++i) v[i] = qspan.at(i, c);
        for (const AlgElem& g : monos) {
            std::vector<AlgElem> gv(r, AlgElem::zero(alg));
            for (int i = 0; i < r; ++i) gv[i] = v[i] * g;
            QVec flat = flatten(gv);
            QMat col(r * d, 1);
            for (int i = 0; i < r * d; ++i) col.at(i, 0) = flat[i];
            mk = hstack(mk, col);
        }
    }
    int base_rank = rank(mk);
    QMat acc = mk;
    std::vector<int> chosen;
    int cur = base_rank;
    for (int c = 0; c < qspan.cols(); ++c) {
        std::vector<AlgElem> v(r, AlgElem::zero(alg));
        for (int i = 0; i < r; ++i) v[i] = qspan.at(i, c);
        QVec flat = flatten(v);
        QMat col(r * d, 1);
        for (int i = 0; i < r * d; ++i) col.at(i, 0) = flat[i];
        QMat trial = hstack(acc, col);
        int tr = rank(trial);
        if (tr > cur) {
            acc = trial;
            cur = tr;
            chosen.push_back(c);
        }
    }
    ArtinMatrix out(alg, r, static_cast<int>(chosen.size()));
    for (size_t c = 0; c < chosen.size(); ++c)
        for (int i = 0; i < r; ++i) out.at(i, static_cast<int>(c)) = qspan.at(i, chosen[c]);
    return out;
}

AlgPoly::AlgPoly(AlgPtr alg, std::vector<AlgElem> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
    for (const AlgElem& x : c_) check_same_alg(alg_, x.alg());
    normalize();
}

void AlgPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgPoly AlgPoly::zero(const AlgPtr& alg) { return AlgPoly(alg, {}); }

AlgPoly AlgPoly::one(const AlgPtr& alg) { return AlgPoly(alg, {AlgElem::one(alg)}); }

AlgPoly AlgPoly::constant(const AlgElem& c) { return AlgPoly(c.alg(), {c}); }

AlgPoly AlgPoly::linear(const AlgElem& c0, const AlgElem& c1) { return AlgPoly(c0.alg(), {c0, c1}); }

AlgElem AlgPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return AlgElem::zero(alg_);
    return c_[k];
}

AlgPoly AlgPoly::operator+(const AlgPoly& o) const {
    check_same_alg(alg_, o.alg_);
    std::vector<AlgElem> c(std::max(c_.size(), o.c_.size()), AlgElem::zero(alg_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return AlgPoly(alg_, c);
}

AlgPoly AlgPoly::operator-(const AlgPoly& o) const {
    check_same_alg(alg_, o.alg_);
    std::vector<AlgElem> c(std::max(c_.size(), o.c_.size()), AlgElem::zero(alg_));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return AlgPoly(alg_, c);
}

AlgPoly AlgPoly::operator*(const AlgPoly& o) const {
    check_same_alg(alg_, o.alg_);
    if (c_.empty() || o.c_.empty()) return zero(alg_);
    std::vector<AlgElem> c(c_.size() + o.c_.size() - 1, AlgElem::zero(alg_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
    return AlgPoly(alg_, c);
}

AlgPoly AlgPoly::scaled(const AlgElem& s) const {
    std::vector<AlgElem> c = c_;
    for (AlgElem& x : c) x = x * s;
    return AlgPoly(alg_, c);
}

bool AlgPoly::operator==(const AlgPoly& o) const {
    check_same_alg(alg_, o.alg_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

AlgElem AlgPoly::eval(const AlgElem& x) const {
    AlgElem acc = AlgElem::zero(alg_);
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

ArtinMatrix AlgPoly::eval_matrix(const ArtinMatrix& m) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of a non-square matrix");
    ArtinMatrix acc(alg_, m.rows(), m.cols());
    for (int k = degree(); k >= 0; --k) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc.at(i, i) = acc.at(i, i) + c_[k];
    }
    return acc;
}

std::pair<AlgPoly, AlgElem> AlgPoly::divide_by_linear(const AlgElem& a) const {
    // Synthetic division by (x - a).
    if (c_.empty()) return {zero(alg_), AlgElem::zero(alg_)};
    std::vector<AlgElem> q(c_.size() > 1 ? c_.size() - 1 : 0, AlgElem::zero(alg_));
    AlgElem carry = AlgElem::zero(alg_);
    for (int k = degree(); k >= 1; --k) {
        carry = c_[k] + carry * a;
        q[k - 1] = carry;
    }
    AlgElem rem = c_[0] + carry * a;
    return {AlgPoly(alg_, q), rem};
}

std::string AlgPoly::to_string() const {
    if (c_.empty()) return "0";
    std::vector<std::string> parts;
    for (int k = 0; k <= degree(); ++k) {
        std::string term = "(" + c_[k].to_string() + ")";
        if (k == 1) term += "*x";
        if (k > 1) term += "*x^" + std::to_string(k);
        parts.push_back(term);
    }
    return join(parts, " + ");
}

AlgPoly charpoly(const ArtinMatrix& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
    const AlgPtr& alg = f.alg();
    int n = f.rows();
    // p(x) = x^n + c_1 x^{n-1} + ... + c_n;  M_k = f (M_{k-1} + c_{k-1} I),
    // c_k = -tr(M_k)/k.
    std::vector<AlgElem> cs(n + 1, AlgElem::zero(alg));
    cs[0] = AlgElem::one(alg);
    ArtinMatrix M(alg, n, n);
    AlgElem prev_c = AlgElem::zero(alg);
    for (int k = 1; k <= n; ++k) {
        ArtinMatrix shifted = M;
        if (k > 1)
            for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + prev_c;
        M = (k == 1) ? f : f * shifted;
        AlgElem tr = AlgElem::zero(alg);
        for (int i = 0; i < n; ++i) tr = tr + M.at(i, i);
        prev_c = (-tr).scaled(make_rat(1, k));
        cs[k] = prev_c;
    }
    std::vector<AlgElem> coeffs(n + 1, AlgElem::zero(alg));
    for (int k = 0; k <= n; ++k) coeffs[n - k] = cs[k];
    return AlgPoly(alg, coeffs);
}

std::vector<AlgPoly> bezout_chain(const std::vector<AlgElem>& lams) {
    if (lams.empty()) throw std::invalid_argument("bezout_chain needs at least one value");
    const AlgPtr& alg = lams[0].alg();
    for (size_t i = 0; i < lams.size(); ++i)
        for (size_t j = i + 1; j < lams.size(); ++j)
            if (!(lams[i] - lams[j]).is_unit())
                throw DomainError("bezout_chain: difference " + lams[i].to_string() + " - " +
                                  lams[j].to_string() + " is not a unit");

    std::vector<AlgPoly> p{AlgPoly::one(alg)};
    AlgPoly prod = AlgPoly::linear(-lams[0], AlgElem::one(alg));  // prod_{i<m} (x - lam_i)
    for (size_t m = 1; m < lams.size(); ++m) {
        auto [q, rem] = prod.divide_by_linear(lams[m]);
        // rem = prod(lam_m) = l, a unit by the pairwise condition.
        AlgElem linv = rem.inverse();
        for (AlgPoly& pi : p) pi = (pi * q).scaled(-linv);
        p.push_back(AlgPoly::constant(linv));
        prod = prod * AlgPoly::linear(-lams[m], AlgElem::one(alg));
    }
    return p;
}

namespace {

void check_eigen_inputs(const ArtinMatrix& f, const std::vector<AlgElem>& lams) {
    if (f.rows() != f.cols()) throw std::invalid_argument("eigen ops need a square matrix");
    if (lams.empty()) throw std::invalid_argument("no eigenvalues given");
    for (const AlgElem& l : lams) check_same_alg(f.alg(), l.alg());
}

ArtinMatrix shifted(const ArtinMatrix& f, const AlgElem& lam) {
    ArtinMatrix m = f;
    for (int i = 0; i < f.rows(); ++i) m.at(i, i) = m.at(i, i) - lam;
    return m;
}

}  // namespace

std::vector<ArtinMatrix> eigen_decompose(const ArtinMatrix& f, const std::vector<AlgElem>& lams) {
    check_eigen_inputs(f, lams);
    const AlgPtr& alg = f.alg();
    ArtinMatrix prod = ArtinMatrix::identity(alg, f.rows());
    for (const AlgElem& l : lams) prod = prod * shifted(f, l);
    if (!prod.is_zero())
        throw DomainError("eigen_decompose: prod (f - lam_i) does not vanish");
    for (size_t i = 0; i < lams.size(); ++i)
        for (size_t j = i + 1; j < lams.size(); ++j)
            if (!(lams[i] - lams[j]).is_unit())
                throw DomainError("eigen_decompose: eigenvalue difference is not a unit");
    std::vector<ArtinMatrix> out;
    for (const AlgElem& l : lams) out.push_back(min_generators(kernel_qbasis(shifted(f, l))));
    return out;
}

std::vector<ArtinMatrix> projection_maps(const ArtinMatrix& f, const std::vector<AlgElem>& lams) {
    check_eigen_inputs(f, lams);
    std::vector<AlgPoly> p = bezout_chain(lams);
    std::vector<ArtinMatrix> out;
    for (size_t i = 0; i < lams.size(); ++i) {
        AlgPoly pi = p[i];
        for (size_t j = 0; j < lams.size(); ++j)
            if (j != i) pi = pi * AlgPoly::linear(-lams[j], AlgElem::one(f.alg()));
        out.push_back(pi.eval_matrix(f));
    }
    return out;
}

ArtinMatrix eigen_basis(const ArtinMatrix& f, const std::vector<AlgElem>& lams) {
    check_eigen_inputs(f, lams);
    const AlgPtr& alg = f.alg();
    int n = f.rows();
    if (static_cast<int>(lams.size()) != n)
        throw std::invalid_argument("eigen_basis needs exactly n eigenvalues");
    for (size_t i = 0; i < lams.size(); ++i)
        for (size_t j = i + 1; j < lams.size(); ++j)
            if (lams[i].residue() == lams[j].residue())
                throw DomainError("eigen_basis: residual eigenvalues not distinct");
    AlgPoly cp = charpoly(f);
    AlgPoly expect = AlgPoly::one(alg);
    for (const AlgElem& l : lams) expect = expect * AlgPoly::linear(-l, AlgElem::one(alg));
    if (!(cp == expect))
        throw DomainError("eigen_basis: characteristic polynomial is not prod (x - lam_i)");

    // Residual eigenvectors (1-dimensional kernels since residues are distinct),
    // lifted as constants and corrected by the component projections.
    QMat fr = f.residue();
    std::vector<ArtinMatrix> proj = projection_maps(f, lams);
    ArtinMatrix b(alg, n, n);
    for (int i = 0; i < n; ++i) {
        QMat shifted_r = fr;
        for (int d = 0; d < n; ++d) shifted_r.at(d, d) -= lams[i].residue();
        QMat ker = kernel_basis(shifted_r);
        if (ker.cols != 1)
            throw DomainError("eigen_basis: residual eigenspace is not a line");
        std::vector<AlgElem> lift(n, AlgElem::zero(alg));
        for (int r = 0; r < n; ++r) lift[r] = AlgElem::constant(alg, ker.at(r, 0));
        std::vector<AlgElem> v = proj[i].apply(lift);
        for (int r = 0; r < n; ++r) b.at(r, i) = v[r];
    }
    if (!b.is_invertible())
        throw DomainError("eigen_basis: constructed basis is not invertible");
    return b;
}

Refinement refinement_from_eigenvalues(const ArtinMatrix& f, const std::vector<AlgElem>& ordered_lams) {
    for (const AlgElem& l : ordered_lams)
        if (!l.is_unit())
            throw DomainError("refinement eigenvalues must be units");
    Refinement ref{eigen_basis(f, ordered_lams), ordered_lams};
    return ref;
}

bool flag_step_stable(const ArtinMatrix& f, const ArtinMatrix& basis, int k) {
    if (k < 0 || k > basis.cols()) throw std::invalid_argument("flag step out of range");
    ArtinMatrix step = basis.columns(0, k);
    ArtinMatrix image = f * step;
    for (int j = 0; j < k; ++j) {
        std::vector<AlgElem> col(f.rows(), AlgElem::zero(f.alg()));
        for (int i = 0; i < f.rows(); ++i) col[i] = image.at(i, j);
        if (!solve_alg(step, col)) return false;
    }
    return true;
}

}  // namespace weylflag
