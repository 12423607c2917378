#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chromsym/rational.hpp"

namespace chromsym::detail {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Exact Gauss-Jordan inverse; throws if singular.
inline Matrix invert(Matrix a) {
    std::size_t n = a.size();
    Matrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("invert: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Rational determinant(Matrix a) {
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// A nonzero vector in the kernel of a^T interpreted row-wise (i.e. a
// vanishing linear combination of the rows), if one exists.
inline std::optional<std::vector<Rational>> null_combination(const Matrix& rows) {
    std::size_t n = rows.size();
    if (n == 0) return std::nullopt;
    std::size_t m = rows[0].size();
    // Solve c * rows = 0: row-reduce rows^T and read off a free column.
    Matrix a(m, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[j][i] = rows[i][j];
    std::vector<long long> pivot_col(m, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        Rational pv = a[r][c];
        for (std::size_t j = 0; j < n; ++j) a[r][j] /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col[r] = static_cast<long long>(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> c(n, 0);
        c[free] = 1;
        for (std::size_t i = 0; i < r; ++i)
            c[pivot_col[i]] = -a[i][free];
        return c;
    }
    return std::nullopt;
}

}  // namespace chromsym::detail
