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

#include "hyperconvo/convolution.hpp"

#include <algorithm>

#include "hyperconvo/errors.hpp"

namespace hyperconvo {

ConvolutionStructure::ConvolutionStructure(std::vector<std::string> names, Index identity, Kernel kernel,
                                           std::vector<Index> involution)
    : names_(std::move(names)), identity_(identity), kernel_(std::move(kernel)), involution_(std::move(involution)) {
    const std::size_t n = names_.size();
    if (n == 0) throw ValidationError("convolution structure has no elements");
    if (identity_ >= n) throw ValidationError("identity index out of range", {identity_});
    if (kernel_.size() != n * n) {
        throw ValidationError("kernel has " + std::to_string(kernel_.size()) + " entries, expected " +
                              std::to_string(n * n));
    }
    for (Index m = 0; m < n; ++m) {
        for (Index k = 0; k < n; ++k) {
            const auto& entry = kernel_[m * n + k];
            if (entry && !entry->empty() && entry->max_index() >= n) {
                throw ValidationError("kernel value at (" + std::to_string(m) + ", " + std::to_string(k) +
                                          ") is supported outside the element set",
                                      {m, k});
            }
        }
    }
    if (involution_.empty()) {
        involution_.resize(n);
        for (Index m = 0; m < n; ++m) involution_[m] = m;
    }
    if (involution_.size() != n) throw ValidationError("involution has wrong length");
    for (Index m = 0; m < n; ++m) {
        if (involution_[m] >= n || involution_[involution_[m]] != m) {
            throw ValidationError("involution is not an involutive permutation at " + std::to_string(m), {m});
        }
    }
}

ConvolutionStructure ConvolutionStructure::from_semigroup(const SemigroupTable& table) {
    const std::vector<Index> elems = table.elements();
    std::vector<Index> position(table.size(), table.size());
    for (Index i = 0; i < elems.size(); ++i) position[elems[i]] = i;

    const std::size_t n = elems.size();
    Kernel kernel(n * n);
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i) {
        names.push_back(table.name(elems[i]));
        for (Index j = 0; j < n; ++j) {
            const Index p = table.product(elems[i], elems[j]);
            if (!table.is_sentinel(p)) kernel[i * n + j] = point_mass(position[p]);
        }
    }
    ConvolutionStructure out(std::move(names), position[table.identity()], std::move(kernel));
    out.base_ = std::make_shared<const SemigroupTable>(table);
    out.base_index_ = elems;
    return out;
}

std::size_t ConvolutionStructure::undefined_products() const {
    return static_cast<std::size_t>(std::count_if(kernel_.begin(), kernel_.end(), [](const auto& e) { return !e; }));
}

bool ConvolutionStructure::is_hermitian() const {
    for (Index m = 0; m < size(); ++m) {
        if (involution_[m] != m) return false;
    }
    return true;
}

FiniteMeasure ConvolutionStructure::convolve(const FiniteMeasure& mu, const FiniteMeasure& nu) const {
    return bilinear_extend(mu, nu, [this](Index m, Index n) { return product(m, n); });
}

std::optional<Index> ConvolutionStructure::from_base(Index base_element) const {
    if (base_index_.empty()) return base_element < size() ? std::optional<Index>(base_element) : std::nullopt;
    for (Index i = 0; i < base_index_.size(); ++i) {
        if (base_index_[i] == base_element) return i;
    }
    return std::nullopt;
}

ConvolutionStructure ConvolutionStructure::with_diagonal(
    const std::vector<std::pair<Index, FiniteMeasure>>& diagonal) const {
    ConvolutionStructure out = *this;
    for (const auto& [n, q] : diagonal) {
        if (n >= size()) throw ValidationError("diagonal index out of range", {n});
        if (!q.empty() && q.max_index() >= size()) throw ValidationError("diagonal measure outside element set", {n});
        out.kernel_[n * size() + n] = q;
    }
    return out;
}

ConvolutionStructure ConvolutionStructure::restrict_to(const std::vector<Index>& subset) const {
    std::vector<Index> position(size(), size());
    for (Index i = 0; i < subset.size(); ++i) {
        if (subset[i] >= size()) throw ValidationError("subset element out of range", {subset[i]});
        position[subset[i]] = i;
    }
    if (position[identity_] == size()) throw ValidationError("subset does not contain the identity", {identity_});

    const std::size_t n = subset.size();
    Kernel kernel(n * n);
    std::vector<std::string> names;
    std::vector<Index> involution(n);
    for (Index i = 0; i < n; ++i) {
        names.push_back(names_[subset[i]]);
        const Index inv = involution_[subset[i]];
        if (position[inv] == size()) throw ValidationError("subset is not closed under the involution", {subset[i]});
        involution[i] = position[inv];
        for (Index j = 0; j < n; ++j) {
            const FiniteMeasure* value = product(subset[i], subset[j]);
            if (value == nullptr) continue;
            FiniteMeasure local;
            for (const auto& [k, w] : *value) {
                if (position[k] == size()) {
                    throw ValidationError("subset is not closed: (" + names_[subset[i]] + ", " + names_[subset[j]] +
                                              ") charges " + names_[k],
                                          {subset[i], subset[j], k});
                }
                local.add(position[k], w);
            }
            kernel[i * n + j] = std::move(local);
        }
    }
    ConvolutionStructure out(std::move(names), position[identity_], std::move(kernel), std::move(involution));
    if (base_) {
        out.base_ = base_;
        for (Index m : subset) out.base_index_.push_back(base_index(m));
    }
    return out;
}

ConvolutionStructure ConvolutionStructure::truncate(Index last) const {
    if (last >= size()) return *this;
    if (identity_ > last) throw ValidationError("truncation drops the identity", {identity_});
    const std::size_t n = last + 1;
    Kernel kernel(n * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const FiniteMeasure* value = product(i, j);
            if (value != nullptr && (value->empty() || value->max_index() <= last)) kernel[i * n + j] = *value;
        }
    }
    std::vector<Index> involution(n);
    for (Index i = 0; i < n; ++i) {
        if (involution_[i] > last) throw ValidationError("truncation breaks the involution", {i});
        involution[i] = involution_[i];
    }
    std::vector<std::string> names(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(n));
    ConvolutionStructure out(std::move(names), identity_, std::move(kernel), std::move(involution));
    if (base_) {
        out.base_ = base_;
        for (Index m = 0; m < n; ++m) out.base_index_.push_back(base_index(m));
    }
    return out;
}

}  // namespace hyperconvo
