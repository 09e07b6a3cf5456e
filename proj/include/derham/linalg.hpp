#ifndef DERHAM_LINALG_HPP
#define DERHAM_LINALG_HPP

#include <cassert>
#include <optional>
#include <utility>

#include "derham/rational.hpp"

namespace derham {

inline QMat zero_matrix(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Rat(0)));
}

inline QMat identity_matrix(std::size_t n) {
    QMat m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t(a[0].size(), QVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline QVec mat_vec(const QMat& a, const QVec& x) {
    QVec y(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    }
    return y;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat c = zero_matrix(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    }
    return c;
}

struct Echelon {
    QMat reduced;               // row-reduced echelon form
    std::vector<int> pivots;    // pivot column per pivot row
    long rank = 0;
};

// Gauss-Jordan over Q. Exact; no pivot magnitude heuristics needed.
inline Echelon rref(QMat m) {
    Echelon e;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = static_cast<long>(r);
    e.reduced = std::move(m);
    return e;
}

// Fraction-free (Bareiss) rank on a denominator-cleared copy. All intermediate
// entries stay integral; used to cross-check the rational elimination.
inline long bareiss_rank(const QMat& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(m[i][j]));
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = numerator(m[i][j]) * (lcm / denominator(m[i][j]));
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = t / prev;  // exact division, Bareiss identity
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

inline long rank(const QMat& m) { return rref(m).rank; }

// Basis of the right kernel {v : Mv = 0}.
inline std::vector<QVec> kernel_basis(const QMat& m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of Ax = b, if consistent.
inline std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    Echelon e = rref(std::move(aug));
    QVec x(cols, Rat(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (static_cast<std::size_t>(e.pivots[r]) == cols) return std::nullopt;  // 0 = 1 row
        x[static_cast<std::size_t>(e.pivots[r])] = e.reduced[r][cols];
    }
    return x;
}

// Inverse of a square nonsingular matrix.
inline QMat mat_inverse(const QMat& a) {
    std::size_t n = a.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("mat_inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    Echelon e = rref(std::move(aug));
    if (static_cast<std::size_t>(e.rank) != n ||
        static_cast<std::size_t>(e.pivots.back()) >= n)
        throw std::invalid_argument("mat_inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.reduced[i][n + j];
    return inv;
}

}  // namespace derham

#endif
