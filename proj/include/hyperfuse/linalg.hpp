#pragma once

// Dense exact linear algebra over a field type (Rational or QuadScalar):
// just enough for desk-scale hypergroups — products, characteristic
// polynomials, unique solves and nullspaces by Gaussian elimination.

#include <optional>
#include <vector>

#include "hyperfuse/polynomial.hpp"

namespace hyperfuse {

template <typename T>
using Mat = std::vector<std::vector<T>>;

template <typename T>
Mat<T> mat_identity(size_t n) {
    Mat<T> m(n, std::vector<T>(n, T(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat<T> r(n, std::vector<T>(m, T(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == T(0)) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

template <typename T>
Mat<T> mat_transpose(const Mat<T>& a) {
    if (a.empty()) return {};
    Mat<T> r(a[0].size(), std::vector<T>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

template <typename T>
std::vector<T> vec_mat(const std::vector<T>& v, const Mat<T>& a) {
    std::vector<T> r(a.empty() ? 0 : a[0].size(), T(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (v[i] == T(0)) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] + v[i] * a[i][j];
    }
    return r;
}

template <typename T>
T mat_trace(const Mat<T>& a) {
    T t(0);
    for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

// Monic characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
template <typename T>
Poly<T> char_poly(const Mat<T>& a) {
    size_t n = a.size();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Mat<T> m = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Mat<T> shifted = m;
            for (size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] + c[n - k + 1];
            m = mat_mul(a, shifted);
        }
        c[n - k] = -(mat_trace(m) / T(static_cast<int>(k)));
    }
    return Poly<T>(std::move(c));
}

// Reduced row echelon form in place; returns pivot column per row.
template <typename T>
std::vector<int> rref(Mat<T>& m) {
    std::vector<int> pivots;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t sel = r;
        while (sel < rows && m[sel][col] == T(0)) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        T inv = T(1) / m[r][col];
        for (size_t j = col; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == T(0)) continue;
            T f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    return pivots;
}

// Unique exact solution of A x = b (any shape); nullopt if inconsistent
// or underdetermined.
template <typename T>
std::optional<std::vector<T>> solve_unique(const Mat<T>& a, const std::vector<T>& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Mat<T> aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    std::vector<T> x(cols, T(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

// Basis of { x : A x = 0 }.
template <typename T>
std::vector<std::vector<T>> nullspace(const Mat<T>& a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Mat<T> m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(cols, T(0));
        v[free] = T(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
std::vector<std::vector<T>> left_nullspace(const Mat<T>& a) {
    return nullspace(mat_transpose(a));
}

} // namespace hyperfuse
