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

#ifndef HYPERCONVO_MEASURE_HPP
#define HYPERCONVO_MEASURE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperconvo/rational.hpp"

namespace hyperconvo {

using Index = std::size_t;

/// Sparse non-negative measure on element indices.
///
/// Only strictly positive weights are stored, so the key set is the support.
/// Adding a weight that cancels an entry removes the key; a weight that would
/// drive an entry negative is rejected.
class FiniteMeasure {
public:
    using Weights = std::map<Index, Rational>;
    using const_iterator = Weights::const_iterator;

    FiniteMeasure() = default;

    /// Builds from (index, weight) pairs; zero weights are dropped, repeated
    /// indices accumulate, negative totals throw std::domain_error.
    static FiniteMeasure from_weights(const std::vector<std::pair<Index, Rational>>& weights);

    void add(Index index, const Rational& weight);

    [[nodiscard]] Rational weight(Index index) const;
    [[nodiscard]] bool contains(Index index) const { return weights_.count(index) != 0; }
    [[nodiscard]] std::vector<Index> support() const;
    [[nodiscard]] std::size_t support_size() const { return weights_.size(); }
    [[nodiscard]] bool empty() const { return weights_.empty(); }
    [[nodiscard]] Rational mass() const;
    [[nodiscard]] bool is_probability() const { return mass() == Rational(1); }
    /// Point mass (single support point).
    [[nodiscard]] bool is_dirac() const { return weights_.size() == 1; }
    [[nodiscard]] Index max_index() const;

    [[nodiscard]] FiniteMeasure scaled(const Rational& factor) const;
    [[nodiscard]] const Weights& weights() const { return weights_; }

    const_iterator begin() const { return weights_.begin(); }
    const_iterator end() const { return weights_.end(); }

    FiniteMeasure& operator+=(const FiniteMeasure& rhs);
    friend FiniteMeasure operator+(FiniteMeasure lhs, const FiniteMeasure& rhs) { return lhs += rhs; }
    friend bool operator==(const FiniteMeasure&, const FiniteMeasure&) = default;

    /// "{0: 1/2, 3: 1/2}"
    [[nodiscard]] std::string to_string() const;

private:
    Weights weights_;
};

/// δ_j.
[[nodiscard]] FiniteMeasure point_mass(Index index);

/// Raised when a convolution needs a kernel value that is not available,
/// which for truncated structures means the product left the window.
class KernelUndefined : public std::runtime_error {
public:
    KernelUndefined(Index m, Index n)
        : std::runtime_error("convolution kernel undefined at (" + std::to_string(m) + ", " +
                             std::to_string(n) + ")"),
          m_(m), n_(n) {}
    [[nodiscard]] Index m() const { return m_; }
    [[nodiscard]] Index n() const { return n_; }

private:
    Index m_;
    Index n_;
};

/// Bilinear extension of a point kernel to finite measures:
/// sum over (m, n) of mu(m) nu(n) kernel(m, n).
///
/// `kernel` is any callable (Index, Index) -> const FiniteMeasure*, returning
/// nullptr where the kernel is undefined.
template <typename Kernel>
FiniteMeasure bilinear_extend(const FiniteMeasure& mu, const FiniteMeasure& nu, const Kernel& kernel) {
    FiniteMeasure out;
    for (const auto& [m, mu_m] : mu) {
        for (const auto& [n, nu_n] : nu) {
            const FiniteMeasure* value = kernel(m, n);
            if (value == nullptr) throw KernelUndefined(m, n);
            const Rational coefficient = mu_m * nu_n;
            for (const auto& [j, w] : *value) out.add(j, coefficient * w);
        }
    }
    return out;
}

}  // namespace hyperconvo

#endif  // HYPERCONVO_MEASURE_HPP
