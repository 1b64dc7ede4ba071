#include "weylflag/qlinalg.hpp"

#include <sstream>

namespace weylflag {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("bad rational literal: " + s);
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transposed() const {
    QMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat hstack(const QMat& l, const QMat& r) {
    if (l.rows == 0 && l.cols == 0) return r;
    if (r.rows == 0 && r.cols == 0) return l;
    if (l.rows != r.rows) throw std::invalid_argument("hstack row mismatch");
    QMat m(l.rows, l.cols + r.cols);
    for (int i = 0; i < l.rows; ++i) {
        for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
        for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
    }
    return m;
}

QMat vstack(const QMat& t, const QMat& b) {
    if (t.rows == 0 && t.cols == 0) return b;
    if (b.rows == 0 && b.cols == 0) return t;
    if (t.cols != b.cols) throw std::invalid_argument("vstack col mismatch");
    QMat m(t.rows + b.rows, t.cols);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
    return m;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("mat_vec shape");
    QVec out(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

QMat mat_mul(const QMat& l, const QMat& r) {
    if (l.cols != r.rows) throw std::invalid_argument("mat_mul shape");
    QMat m(l.rows, r.cols);
    for (int i = 0; i < l.rows; ++i)
        for (int k = 0; k < l.cols; ++k) {
            if (l.at(i, k) == 0) continue;
            for (int j = 0; j < r.cols; ++j)
                if (r.at(k, j) != 0) m.at(i, j) += l.at(i, k) * r.at(k, j);
        }
    return m;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    QMat k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.at(f, static_cast<int>(fi)) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], static_cast<int>(fi)) = -r.at(static_cast<int>(pi), f);
    }
    return k;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve shape");
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    QVec x(m.cols, Rat(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[pivots[pi]] = aug.at(static_cast<int>(pi), m.cols);
    return x;
}

bool in_col_span(const QMat& m, const QVec& v) { return solve(m, v).has_value(); }

QMat col_space_intersection(const QMat& l, const QMat& r) {
    if (l.rows != r.rows) throw std::invalid_argument("intersection row mismatch");
    if (l.cols == 0 || r.cols == 0) return QMat(l.rows, 0);
    QMat neg_r = r;
    for (auto& x : neg_r.a) x = -x;
    QMat k = kernel_basis(hstack(l, neg_r));
    // Columns of k split as (coeffs in l | coeffs in r); the intersection
    // vectors are l times the top part.  Reduce to an independent set.
    QMat vecs(l.rows, k.cols);
    for (int c = 0; c < k.cols; ++c) {
        QVec coeff(l.cols);
        for (int j = 0; j < l.cols; ++j) coeff[j] = k.at(j, c);
        QVec v = mat_vec(l, coeff);
        for (int i = 0; i < l.rows; ++i) vecs.at(i, c) = v[i];
    }
    QMat red = vecs;
    std::vector<int> piv = rref(red);
    QMat out(l.rows, static_cast<int>(piv.size()));
    for (size_t c = 0; c < piv.size(); ++c)
        for (int i = 0; i < l.rows; ++i) out.at(i, static_cast<int>(c)) = vecs.at(i, piv[c]);
    return out;
}

}  // namespace weylflag
