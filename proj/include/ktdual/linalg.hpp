#ifndef KTDUAL_LINALG_HPP
#define KTDUAL_LINALG_HPP

#include <optional>
#include <vector>

#include "ktdual/cyclo.hpp"
#include "ktdual/errors.hpp"

// Dense exact Gaussian elimination over a field scalar K (Rational or
// Cyclotomic). All pivoting is "first nonzero": exactness makes numerical
// pivot choice irrelevant.

namespace ktdual::linalg {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Rational scalar_inverse(const Rational& x) { return 1 / x; }
inline Cyclotomic scalar_inverse(const Cyclotomic& x) { return x.inverse(); }

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
int rank(Matrix<K> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && scalar_is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        K inv = scalar_inverse(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (size_t i = row + 1; i < rows; ++i) {
            if (scalar_is_zero(m[i][col])) continue;
            K f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

template <class K>
K determinant(Matrix<K> m) {
    size_t n = m.size();
    K det = K(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && scalar_is_zero(m[piv][col])) ++piv;
        if (piv == n) return K(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = det * K(-1);
        }
        det = det * m[col][col];
        K inv = scalar_inverse(m[col][col]);
        for (size_t i = col + 1; i < n; ++i) {
            if (scalar_is_zero(m[i][col])) continue;
            K f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return det;
}

// Solve A x = b for square A; empty when A is singular.
template <class K>
std::optional<std::vector<K>> solve(Matrix<K> a, std::vector<K> b) {
    size_t n = a.size();
    if (n == 0) return std::vector<K>{};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && scalar_is_zero(a[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        K inv = scalar_inverse(a[col][col]);
        for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
        b[col] = b[col] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || scalar_is_zero(a[i][col])) continue;
            K f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[col][j];
            b[i] = b[i] - f * b[col];
        }
    }
    return b;
}

// Inverse of a square matrix; empty when singular.
template <class K>
std::optional<Matrix<K>> invert(Matrix<K> a) {
    size_t n = a.size();
    Matrix<K> inv(n, std::vector<K>(n, K(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = K(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && scalar_is_zero(a[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        K f = scalar_inverse(a[col][col]);
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * f;
            inv[col][j] = inv[col][j] * f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || scalar_is_zero(a[i][col])) continue;
            K g = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - g * a[col][j];
                inv[i][j] = inv[i][j] - g * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace ktdual::linalg

#endif
