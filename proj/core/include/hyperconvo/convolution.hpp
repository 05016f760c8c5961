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

#ifndef HYPERCONVO_CONVOLUTION_HPP
#define HYPERCONVO_CONVOLUTION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperconvo/measure.hpp"
#include "hyperconvo/semigroup.hpp"

namespace hyperconvo {

/// A candidate discrete semiconvo / hypergroup on a finite window: a map
/// (m, n) -> finite measure together with an involution.
///
/// Kernel entries may be undefined (the product leaves the window); checks
/// skip those and say so. Immutable once built.
class ConvolutionStructure {
public:
    using Kernel = std::vector<std::optional<FiniteMeasure>>;

    /// `kernel` is row-major, size n*n. Throws ValidationError on index
    /// errors or if `involution` is not an involutive permutation.
    ConvolutionStructure(std::vector<std::string> names, Index identity, Kernel kernel,
                         std::vector<Index> involution = {});

    /// The undeformed convolution δ_m * δ_n = δ_{mn} of a semigroup table.
    /// Sentinel products become undefined entries; the sentinel itself is
    /// dropped from the element set.
    static ConvolutionStructure from_semigroup(const SemigroupTable& table);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] Index identity() const { return identity_; }
    [[nodiscard]] const std::string& name(Index m) const { return names_.at(m); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// nullptr when the product is outside the window.
    [[nodiscard]] const FiniteMeasure* product(Index m, Index n) const {
        const auto& entry = kernel_[m * size() + n];
        return entry ? &*entry : nullptr;
    }
    [[nodiscard]] const Kernel& kernel() const { return kernel_; }
    [[nodiscard]] std::size_t undefined_products() const;

    [[nodiscard]] Index involution(Index m) const { return involution_[m]; }
    [[nodiscard]] const std::vector<Index>& involution_map() const { return involution_; }
    [[nodiscard]] bool is_hermitian() const;

    /// Bilinear extension of the kernel; throws KernelUndefined.
    [[nodiscard]] FiniteMeasure convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) const;

    /// Underlying semigroup, when the structure was built from one. Element i
    /// of the structure is base_index(i) of the table.
    [[nodiscard]] const SemigroupTable* base() const { return base_.get(); }
    [[nodiscard]] Index base_index(Index m) const { return base_index_.empty() ? m : base_index_[m]; }
    /// Structure element for a base element, if present.
    [[nodiscard]] std::optional<Index> from_base(Index base_element) const;

    /// Same structure with δ_n * δ_n replaced by the given measures, where the
    /// map keys are structure indices. Used to deform the idempotent diagonal.
    [[nodiscard]] ConvolutionStructure with_diagonal(const std::vector<std::pair<Index, FiniteMeasure>>& diagonal) const;

    /// Sub-structure on `subset`. Kernel values on subset pairs must be
    /// supported in the subset (ValidationError otherwise); undefined entries
    /// stay undefined.
    [[nodiscard]] ConvolutionStructure restrict_to(const std::vector<Index>& subset) const;

    /// Keeps elements 0..last; products whose support reaches past `last`
    /// become undefined.
    [[nodiscard]] ConvolutionStructure truncate(Index last) const;

    friend bool operator==(const ConvolutionStructure& lhs, const ConvolutionStructure& rhs) {
        return lhs.names_ == rhs.names_ && lhs.identity_ == rhs.identity_ && lhs.kernel_ == rhs.kernel_ &&
               lhs.involution_ == rhs.involution_;
    }

private:
    std::vector<std::string> names_;
    Index identity_ = 0;
    Kernel kernel_;
    std::vector<Index> involution_;
    std::shared_ptr<const SemigroupTable> base_;
    std::vector<Index> base_index_;
};

}  // namespace hyperconvo

#endif  // HYPERCONVO_CONVOLUTION_HPP
