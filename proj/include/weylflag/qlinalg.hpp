#pragma once

#include <optional>
#include <vector>

#include "weylflag/rational.hpp"

namespace weylflag {

// Dense rational matrix, row major. Small sizes only (everything in this
// library is at most a few dozen rows); algorithms are plain fraction-exact
// Gaussian elimination.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static QMat identity(int n);
    QMat transposed() const;
    bool operator==(const QMat& o) const = default;
};

using QVec = std::vector<Rat>;

QMat hstack(const QMat& l, const QMat& r);
QMat vstack(const QMat& t, const QMat& b);
QVec mat_vec(const QMat& m, const QVec& v);
QMat mat_mul(const QMat& l, const QMat& r);

// Reduces m in place to reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of {x : m x = 0}, returned as columns. May have zero columns.
QMat kernel_basis(const QMat& m);

// One solution of m x = b, if any.
std::optional<QVec> solve(const QMat& m, const QVec& b);

bool in_col_span(const QMat& m, const QVec& v);

// Basis (as columns) of the intersection of the column spans.
QMat col_space_intersection(const QMat& l, const QMat& r);

}  // namespace weylflag
