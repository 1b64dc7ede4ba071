#pragma once

#include "weylflag/artin.hpp"
#include "weylflag/perm.hpp"

namespace weylflag {

// Complete flag over a local artinian algebra, measured against the standard
// coordinate flag Fil_k = span(e_1..e_k): step k of the flag is the span of
// the first k matrix columns.  The matrix must be invertible, which makes
// every step a free direct summand of its rank.
class FlagOverRing {
public:
    explicit FlagOverRing(ArtinMatrix m);

    const ArtinMatrix& matrix() const { return m_; }
    const AlgPtr& alg() const { return m_.alg(); }
    int n() const { return m_.rows(); }

private:
    ArtinMatrix m_;
};

// 0/1 matrix of w: entry 1 at (i, j) iff i = w(j) (0-based storage).
QMat perm_matrix(const Permutation& w);

// r_w(p, q) = #{ j <= q : w(j) <= p }; the closed cell of w is cut out by the
// conditions rank(M[p+1..n, 1..q]) <= q - r_w(p, q).
int rank_function(const Permutation& w, int p, int q);

// Membership of the flag in the closed Schubert cell of w: every
// (q - r_w(p,q) + 1)-minor of the southwest block M[p+1..n, 1..q] vanishes in
// the algebra, for all p, q.  Over a field this is equivalent to "the unique
// open cell of the flag is Bruhat-below w"; over a ring it is the
// scheme-theoretic membership and is strictly weaker than lying in some open
// cell below w.
bool closed_cell_member(const FlagOverRing& f, const Permutation& w);

// Membership in the open cell: a representative with zero pattern
// a_ij = 0 for i > w(j) and unit anti-diagonal entries a_{w(j), j}.  Decided
// column by column: column j must be correctable to an element of Fil_{w(j)}
// with unit e_{w(j)}-coefficient using earlier columns, an exact linear
// solvability question over the algebra.
bool open_cell_member(const FlagOverRing& f, const Permutation& w);

// The subquotient criterion: (F_j cap Fil_{w(j)}) / (F_j cap Fil_{w(j)-1})
// free of rank 1 over the algebra for every j.  Intersections are computed as
// finite-dimensional Q-spaces carrying the algebra action; freeness of rank 1
// is "Q-dimension equals dim(algebra) and the quotient is cyclic" (Nakayama).
// Equivalent to open_cell_member; kept as a genuinely independent route.
bool subquotient_cell_test(const FlagOverRing& f, const Permutation& w);

// Tangent dimension of the closed Schubert variety of w at the torus-fixed
// point of tau, by the type-A combinatorial count
//   #{ transpositions t : tau t Bruhat-below w }
// (left and right multiplication give the same set).  Agrees with the
// Jacobian oracle on the full n <= 4 table; equals length(w) at tau = w.
int schubert_tangent_dim(const Permutation& w, const Permutation& tau);

// Independent oracle: rank of the Jacobian, at the point of tau, of the
// determinantal equations of the closed cell in the affine chart
// M(y) = tau_matrix (I + Y), Y strictly lower triangular; returns
// n(n-1)/2 - rank.  Exact rational arithmetic.
int jacobian_oracle_tangent_dim(const Permutation& w, const Permutation& tau, int bound = 5);

struct CellQuery {
    Permutation w;
    bool closed = false;
    bool open = false;
    bool subquotient = false;
};

// Position of a Hodge-type flag measured against a refinement's eigen-flag:
// rewrites the flag in the refinement's basis and reports all three
// membership tests against every w.
std::vector<CellQuery> flag_position_of_refinement(const Refinement& ref, const FlagOverRing& hodge);

}  // namespace weylflag
