#include "weylflag/schubert.hpp"

#include <algorithm>

namespace weylflag {

namespace {

// All size-k index subsets of {0..m-1}.
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= m - (k - depth); ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

long long int_det(const std::vector<std::vector<long long>>& m) {
    int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    if (k == 1) return m[0][0];
    long long acc = 0;
    for (int i = 0; i < k; ++i) {
        if (m[i][0] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (int r = 0; r < k; ++r) {
            if (r == i) continue;
            std::vector<long long> row(m[r].begin() + 1, m[r].end());
            minor.push_back(row);
        }
        long long term = m[i][0] * int_det(minor);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

FlagOverRing::FlagOverRing(ArtinMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("flag matrix must be square");
    if (!m_.is_invertible()) throw DomainError("flag matrix is not invertible");
}

QMat perm_matrix(const Permutation& w) {
    QMat m(w.n(), w.n());
    for (int j = 1; j <= w.n(); ++j) m.at(w(j) - 1, j - 1) = 1;
    return m;
}

int rank_function(const Permutation& w, int p, int q) {
    int r = 0;
    for (int j = 1; j <= q; ++j)
        if (w(j) <= p) ++r;
    return r;
}

bool closed_cell_member(const FlagOverRing& f, const Permutation& w) {
    int n = f.n();
    if (w.n() != n) throw std::invalid_argument("flag/permutation rank mismatch");
    const ArtinMatrix& M = f.matrix();
    for (int p = 1; p < n; ++p) {
        for (int q = 1; q < n; ++q) {
            int k = q - rank_function(w, p, q);
            int block_rows = n - p;
            if (k >= std::min(block_rows, q)) continue;
            for (const auto& R : subsets(block_rows, k + 1)) {
                for (const auto& C : subsets(q, k + 1)) {
                    ArtinMatrix sub(f.alg(), k + 1, k + 1);
                    for (int a = 0; a <= k; ++a)
                        for (int b = 0; b <= k; ++b) sub.at(a, b) = M.at(p + R[a], C[b]);
                    if (!sub.det().is_zero()) return false;
                }
            }
        }
    }
    return true;
}

bool open_cell_member(const FlagOverRing& f, const Permutation& w) {
    int n = f.n();
    if (w.n() != n) throw std::invalid_argument("flag/permutation rank mismatch");
    const AlgPtr& alg = f.alg();
    int d = alg->dim();
    for (int j = 1; j <= n; ++j) {
        int wj = w(j);
        // Want unit c_j and earlier-column corrections with
        //   sum_{k<=j} c_k m_k = e_{wj} + span(e_1..e_{wj-1});
        // normalized so the e_{wj} coefficient is exactly 1:
        //   [ m_1 .. m_j | -e_1 .. -e_{wj-1} ] z = e_{wj},  z_j a unit.
        ArtinMatrix sys(alg, n, j + wj - 1);
        for (int c = 0; c < j; ++c)
            for (int r = 0; r < n; ++r) sys.at(r, c) = f.matrix().at(r, c);
        for (int c = 0; c < wj - 1; ++c)
            sys.at(c, j + c) = -AlgElem::one(alg);
        QMat E = sys.expand();
        QVec target(static_cast<size_t>(n) * d, Rat(0));
        target[static_cast<size_t>(wj - 1) * d] = 1;
        auto part = solve(E, target);
        if (!part) return false;
        // z_j is a unit iff its residue coordinate is nonzero; the attainable
        // residues form an affine line scanned via the kernel.
        size_t unit_coord = static_cast<size_t>(j - 1) * d;
        if ((*part)[unit_coord] != 0) continue;
        QMat ker = kernel_basis(E);
        bool can = false;
        for (int c = 0; c < ker.cols && !can; ++c)
            if (ker.at(static_cast<int>(unit_coord), c) != 0) can = true;
        if (!can) return false;
    }
    return true;
}

namespace {

// Q-dimension of F_j cap Fil_p together with a column basis of it inside
// Q^{n d}; E is expand(first j columns), full column rank.
QMat intersection_basis(const QMat& E, int p, int d, int jd) {
    int rows_below = E.rows - p * d;
    QMat bottom(rows_below, jd);
    for (int i = 0; i < rows_below; ++i)
        for (int c = 0; c < jd; ++c) bottom.at(i, c) = E.at(p * d + i, c);
    QMat k = kernel_basis(bottom);
    QMat out(E.rows, k.cols);
    for (int c = 0; c < k.cols; ++c) {
        QVec coeff(jd);
        for (int i = 0; i < jd; ++i) coeff[i] = k.at(i, c);
        QVec v = mat_vec(E, coeff);
        for (int i = 0; i < E.rows; ++i) out.at(i, c) = v[i];
    }
    return out;
}

}  // namespace

bool subquotient_cell_test(const FlagOverRing& f, const Permutation& w) {
    int n = f.n();
    if (w.n() != n) throw std::invalid_argument("flag/permutation rank mismatch");
    const AlgPtr& alg = f.alg();
    int d = alg->dim();
    for (int j = 1; j <= n; ++j) {
        QMat E = f.matrix().columns(0, j).expand();
        QMat xb = intersection_basis(E, w(j), d, j * d);
        QMat yb = intersection_basis(E, w(j) - 1, d, j * d);
        if (xb.cols - yb.cols != d) return false;
        // Cyclicity of X/Y: dim X - dim(mX + Y) = 1 (Nakayama).
        QMat mx(E.rows, 0);
        for (int c = 0; c < xb.cols; ++c) {
            QVec flat(E.rows);
            for (int i = 0; i < E.rows; ++i) flat[i] = xb.at(i, c);
            std::vector<AlgElem> v = unflatten(alg, flat);
            for (int b = 1; b < d; ++b) {
                QVec mono_c(d, Rat(0));
                mono_c[b] = 1;
                AlgElem g(alg, mono_c);
                std::vector<AlgElem> gv(v.size(), AlgElem::zero(alg));
                for (size_t i = 0; i < v.size(); ++i) gv[i] = v[i] * g;
                QVec gflat = flatten(gv);
                QMat col(E.rows, 1);
                for (int i = 0; i < E.rows; ++i) col.at(i, 0) = gflat[i];
                mx = hstack(mx, col);
            }
        }
        if (xb.cols - rank(hstack(mx, yb)) != 1) return false;
    }
    return true;
}

int schubert_tangent_dim(const Permutation& w, const Permutation& tau) {
    if (!bruhat_leq(tau, w))
        throw DomainError("tangent point " + tau.to_string() + " is not in the closed cell of " + w.to_string());
    int n = w.n();
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (bruhat_leq(right_mult_transposition(tau, i, j), w)) ++count;
    return count;
}

int jacobian_oracle_tangent_dim(const Permutation& w, const Permutation& tau, int bound) {
    if (!bruhat_leq(tau, w))
        throw DomainError("tangent point " + tau.to_string() + " is not in the closed cell of " + w.to_string());
    int n = w.n();
    if (n > bound) throw DomainError("jacobian oracle bound exceeded");

    // Chart at the point of tau: M(y) = tau_matrix (I + Y) with Y strictly
    // lower triangular, i.e. M(y)_{ab} = [tauinv(a) == b] + y_{tauinv(a), b}
    // (the variable present only when tauinv(a) > b).
    Permutation tauinv = tau.inverse();
    int nvars = n * (n - 1) / 2;
    std::vector<std::vector<int>> varid(n, std::vector<int>(n, -1));
    int next = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < r; ++c) varid[r][c] = next++;

    auto const_entry = [&](int a, int b) -> long long { return tauinv(a + 1) - 1 == b ? 1 : 0; };
    auto var_entry = [&](int a, int b) -> int {
        int r = tauinv(a + 1) - 1;
        return r > b ? varid[r][b] : -1;
    };

    std::vector<QVec> jac;  // rows of the Jacobian, nvars columns
    for (int p = 1; p < n; ++p) {
        for (int q = 1; q < n; ++q) {
            int k = q - rank_function(w, p, q);
            int block_rows = n - p;
            if (k >= std::min(block_rows, q)) continue;
            for (const auto& R : subsets(block_rows, k + 1)) {
                for (const auto& C : subsets(q, k + 1)) {
                    std::vector<std::vector<long long>> s(k + 1, std::vector<long long>(k + 1));
                    for (int a = 0; a <= k; ++a)
                        for (int b = 0; b <= k; ++b) s[a][b] = const_entry(p + R[a], C[b]);
                    if (int_det(s) != 0)
                        throw DomainError("internal: base point not on the variety");
                    // Gradient at y = 0: sum over cells of cofactor * dcell.
                    QVec row(nvars, Rat(0));
                    bool nonzero = false;
                    for (int a = 0; a <= k; ++a) {
                        for (int b = 0; b <= k; ++b) {
                            int v = var_entry(p + R[a], C[b]);
                            if (v < 0) continue;
                            std::vector<std::vector<long long>> minor;
                            for (int r = 0; r <= k; ++r) {
                                if (r == a) continue;
                                std::vector<long long> mrow;
                                for (int c = 0; c <= k; ++c)
                                    if (c != b) mrow.push_back(s[r][c]);
                                minor.push_back(mrow);
                            }
                            long long cof = int_det(minor);
                            if ((a + b) % 2 == 1) cof = -cof;
                            if (cof != 0) {
                                row[v] += Rat(static_cast<long>(cof));
                                nonzero = true;
                            }
                        }
                    }
                    if (nonzero) jac.push_back(row);
                }
            }
        }
    }
    if (jac.empty()) return nvars;
    QMat J(static_cast<int>(jac.size()), nvars);
    for (size_t r = 0; r < jac.size(); ++r)
        for (int c = 0; c < nvars; ++c) J.at(static_cast<int>(r), c) = jac[r][c];
    return nvars - rank(J);
}

std::vector<CellQuery> flag_position_of_refinement(const Refinement& ref, const FlagOverRing& hodge) {
    if (ref.basis.rows() != hodge.n()) throw std::invalid_argument("refinement/flag shape mismatch");
    FlagOverRing rel(ref.basis.inverse() * hodge.matrix());
    std::vector<CellQuery> out;
    for (const Permutation& w : all_permutations(hodge.n()))
        out.push_back({w, closed_cell_member(rel, w), open_cell_member(rel, w),
                       subquotient_cell_test(rel, w)});
    return out;
}

}  // namespace weylflag
