/*
   Copyright 2026 The hyperconvo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYPERCONVO_SRC_LINEAR_HPP
#define HYPERCONVO_SRC_LINEAR_HPP

#include <optional>
#include <vector>

#include "hyperconvo/rational.hpp"

namespace hyperconvo::detail {

using Matrix = std::vector<std::vector<Rational>>;

// Solves L x = b for square lower-triangular L with nonzero diagonal.
inline std::vector<Rational> forward_substitute(const Matrix& lower, const std::vector<Rational>& rhs) {
    std::vector<Rational> x(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        Rational acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (!lower[i][j].is_zero()) acc -= lower[i][j] * x[j];
        }
        x[i] = acc / lower[i][i];
    }
    return x;
}

// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Matrix> invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = a[col][col].reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

inline std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    }
    return out;
}

}  // namespace hyperconvo::detail

#endif  // HYPERCONVO_SRC_LINEAR_HPP
