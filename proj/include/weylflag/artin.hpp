#pragma once

#include <memory>

#include "weylflag/qlinalg.hpp"

namespace weylflag {

class TruncatedAlgebra;
using AlgPtr = std::shared_ptr<const TruncatedAlgebra>;

// Local artinian algebra Q[g_1,...,g_k]/(g_1^{e_1},...,g_k^{e_k}) with the
// induced monomial basis over Q (constant monomial first, then by total degree
// and lexicographic exponents).  The maximal ideal is spanned by the
// non-constant monomials; an element is a unit iff its constant term is
// nonzero.  k = 0 gives the base field Q itself.
class TruncatedAlgebra {
public:
    TruncatedAlgebra(std::vector<std::string> gens, std::vector<int> trunc);

    static AlgPtr rationals();
    static AlgPtr truncated(const std::string& gen, int m);  // Q[gen]/(gen^m)
    static AlgPtr dual_numbers() { return truncated("e", 2); }
    // "e^2", "e^2,f^3"; "Q" (or empty) for the base field.
    static AlgPtr parse(const std::string& spec);

    int dim() const { return static_cast<int>(basis_.size()); }
    int ngens() const { return static_cast<int>(gens_.size()); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::vector<int>& truncations() const { return trunc_; }
    const std::vector<std::vector<int>>& basis() const { return basis_; }

    // Index of an exponent tuple in the monomial basis, -1 if truncated away.
    int mono_index(const std::vector<int>& expo) const;
    // Basis index of mono_i * mono_j, -1 if the product is truncated away.
    int mul_table(int i, int j) const { return mul_[static_cast<size_t>(i) * basis_.size() + j]; }

    std::string mono_str(int idx) const;
    std::string name() const;  // the parse() spelling
    bool same(const TruncatedAlgebra& o) const { return gens_ == o.gens_ && trunc_ == o.trunc_; }

private:
    std::vector<std::string> gens_;
    std::vector<int> trunc_;
    std::vector<std::vector<int>> basis_;
    std::vector<int> mul_;
};

// Element of a TruncatedAlgebra: rational coefficients on the monomial basis.
class AlgElem {
public:
    AlgElem() = default;  // invalid until assigned
    AlgElem(AlgPtr alg, QVec coeffs);
    static AlgElem zero(const AlgPtr& alg);
    static AlgElem one(const AlgPtr& alg);
    static AlgElem constant(const AlgPtr& alg, const Rat& r);
    static AlgElem generator(const AlgPtr& alg, int k = 0);

    const AlgPtr& alg() const { return alg_; }
    const QVec& coeffs() const { return c_; }
    const Rat& coeff(int idx) const { return c_[idx]; }
    Rat residue() const { return c_[0]; }

    bool is_zero() const;
    bool is_unit() const { return c_[0] != 0; }

    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator*(const AlgElem& o) const;
    AlgElem operator-() const;
    AlgElem scaled(const Rat& r) const;
    AlgElem inverse() const;  // DomainError on non-units
    bool operator==(const AlgElem& o) const;

    // "3/2 + 1/4*e + 0*e^2": one term per basis monomial, in basis order.
    std::string to_string() const;
    // Accepts the printed form plus mild variations ("2*e^2*f", "3 - e");
    // monomials at or above the truncation are zero in the algebra and are
    // accepted and dropped.
    static AlgElem parse(const AlgPtr& alg, const std::string& s);

private:
    AlgPtr alg_;
    QVec c_;
};

// Matrix over a TruncatedAlgebra.  Linear algebra over the algebra reduces to
// exact linear algebra over Q through the regular representation: expand()
// replaces each entry by the dim(A) x dim(A) rational matrix of multiplication
// by it, and flatten() matches vectors to that block convention.
class ArtinMatrix {
public:
    ArtinMatrix() = default;
    ArtinMatrix(AlgPtr alg, int rows, int cols);  // zero matrix

    static ArtinMatrix identity(const AlgPtr& alg, int n);
    static ArtinMatrix from_rational(const AlgPtr& alg, const QMat& m);

    const AlgPtr& alg() const { return alg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    AlgElem& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }  // 0-based
    const AlgElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    ArtinMatrix operator+(const ArtinMatrix& o) const;
    ArtinMatrix operator-(const ArtinMatrix& o) const;
    ArtinMatrix operator*(const ArtinMatrix& o) const;
    ArtinMatrix scaled(const AlgElem& s) const;
    bool operator==(const ArtinMatrix& o) const;

    bool is_zero() const;
    ArtinMatrix columns(int first, int count) const;

    QMat residue() const;
    QMat expand() const;

    // Invertibility over a local ring is residual invertibility.
    bool is_invertible() const;
    // Gauss-Jordan with unit pivots (pivot = entry with nonzero residue).
    ArtinMatrix inverse() const;
    AlgElem det() const;  // Laplace expansion; exact, any square size

    std::vector<AlgElem> apply(const std::vector<AlgElem>& v) const;

private:
    AlgPtr alg_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<AlgElem> e_;
};

QVec flatten(const std::vector<AlgElem>& v);
std::vector<AlgElem> unflatten(const AlgPtr& alg, const QVec& flat);

// One A-linear solve M x = y through the regular representation.
std::optional<std::vector<AlgElem>> solve_alg(const ArtinMatrix& m, const std::vector<AlgElem>& y);

// Q-basis of {x : M x = 0}, one column per basis vector.
ArtinMatrix kernel_qbasis(const ArtinMatrix& m);

// Reduces a Q-spanning set of an A-submodule of A^r to a minimal A-generating
// set (Nakayama: lifts of a basis of K / mK generate).
ArtinMatrix min_generators(const ArtinMatrix& qspan);

// Polynomial over a TruncatedAlgebra, coefficients low to high.
class AlgPoly {
public:
    AlgPoly() = default;
    AlgPoly(AlgPtr alg, std::vector<AlgElem> coeffs);
    static AlgPoly zero(const AlgPtr& alg);
    static AlgPoly one(const AlgPtr& alg);
    static AlgPoly constant(const AlgElem& c);
    static AlgPoly linear(const AlgElem& c0, const AlgElem& c1);  // c0 + c1 x

    const AlgPtr& alg() const { return alg_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    AlgElem coeff(int k) const;

    AlgPoly operator+(const AlgPoly& o) const;
    AlgPoly operator-(const AlgPoly& o) const;
    AlgPoly operator*(const AlgPoly& o) const;
    AlgPoly scaled(const AlgElem& s) const;
    bool operator==(const AlgPoly& o) const;

    AlgElem eval(const AlgElem& x) const;
    ArtinMatrix eval_matrix(const ArtinMatrix& m) const;

    // P = Q (x - a) + r with r constant; returns (Q, r).
    std::pair<AlgPoly, AlgElem> divide_by_linear(const AlgElem& a) const;

    std::string to_string() const;

private:
    void normalize();
    AlgPtr alg_;
    std::vector<AlgElem> c_;
};

// Monic characteristic polynomial by the Faddeev-LeVerrier recursion (valid
// over any commutative Q-algebra).
AlgPoly charpoly(const ArtinMatrix& f);

// P_1..P_m with sum_i P_i(x) prod_{j != i} (x - lam_j) = 1, built by the
// inductive recursion: with l = prod_{i<m} (lam_m - lam_i) and
// prod_{i<m} (x - lam_i) = Q(x)(x - lam_m) + l, the previous P_i pick up the
// factor -l^{-1} Q and P_m = l^{-1}.  Requires all pairwise differences to be
// units.
std::vector<AlgPoly> bezout_chain(const std::vector<AlgElem>& lams);

// Bases of ker(f - lam_i) with A^n = (+)_i ker(f - lam_i).  Preconditions:
// prod_i (f - lam_i) = 0 and pairwise unit differences.  Each basis is a
// minimal A-generating set extracted from the exact Q-kernel.
std::vector<ArtinMatrix> eigen_decompose(const ArtinMatrix& f, const std::vector<AlgElem>& lams);

// Projections pi_i = prod_{j != i} (f - lam_j) P_i(f) onto the i-th summand;
// they reconstruct: sum_i pi_i = identity.
std::vector<ArtinMatrix> projection_maps(const ArtinMatrix& f, const std::vector<AlgElem>& lams);

// Invertible B with column i generating ker(f - lam_i), built per the
// constructive proof: diagonalize the residual matrix, lift the residual
// eigenbasis, correct each lift by its component projection.  Requires
// charpoly(f) = prod (x - lam_i) with residually distinct lam_i.
ArtinMatrix eigen_basis(const ArtinMatrix& f, const std::vector<AlgElem>& lams);

// Ordered eigenvalues (units, residually distinct) plus the eigen-flag they
// induce; flag step i is spanned by the first i basis columns and is stable
// under the endomorphism the refinement was built from.
struct Refinement {
    ArtinMatrix basis;
    std::vector<AlgElem> eigenvalues;
};

Refinement refinement_from_eigenvalues(const ArtinMatrix& f, const std::vector<AlgElem>& ordered_lams);

// f(span of first k basis columns) contained in that span; exact membership solves.
bool flag_step_stable(const ArtinMatrix& f, const ArtinMatrix& basis, int k);

}  // namespace weylflag
