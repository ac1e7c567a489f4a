#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "qma/errors.hpp"

namespace qma {

using Rat = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<long long>>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (long long v : m[i]) out[i].emplace_back(v);
    }
    return out;
}

/// Solve a x = rhs by exact Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> rhs) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
    return x;
}

/// Basis of the right kernel {v : a v = 0}, exact.
inline std::vector<std::vector<Rat>> nullspace(RatMatrix a) {
    if (a.empty()) return {};
    size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rank][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t col = 0; col < cols; ++col) {
            int p = pivot_of_col[col];
            if (p >= 0) v[col] = -a[size_t(p)][free_col] / a[size_t(p)][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<long long>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline IntMatrix int_transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix out(a[0].size(), std::vector<long long>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

}  // namespace qma
