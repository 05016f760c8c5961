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

#include "hyperconvo/measure.hpp"

#include <sstream>

namespace hyperconvo {

FiniteMeasure FiniteMeasure::from_weights(const std::vector<std::pair<Index, Rational>>& weights) {
    // Weights are summed before the sign check: {(1, 1/2), (1, -1/4)} is accepted.
    std::map<Index, Rational> totals;
    for (const auto& [index, w] : weights) totals[index] += w;
    FiniteMeasure out;
    for (const auto& [index, w] : totals) {
        if (w.sign() < 0) {
            throw std::domain_error("negative weight " + w.to_string() + " at index " + std::to_string(index));
        }
        if (!w.is_zero()) out.weights_.emplace(index, w);
    }
    return out;
}

void FiniteMeasure::add(Index index, const Rational& weight) {
    if (weight.is_zero()) return;
    auto it = weights_.find(index);
    if (it == weights_.end()) {
        if (weight.sign() < 0) {
            throw std::domain_error("negative weight " + weight.to_string() + " at index " + std::to_string(index));
        }
        weights_.emplace(index, weight);
        return;
    }
    Rational updated = it->second + weight;
    const int s = updated.sign();
    if (s == 0) {
        weights_.erase(it);
    } else if (s < 0) {
        throw std::domain_error("weight at index " + std::to_string(index) + " became negative");
    } else {
        it->second = std::move(updated);
    }
}

Rational FiniteMeasure::weight(Index index) const {
    auto it = weights_.find(index);
    return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<Index> FiniteMeasure::support() const {
    std::vector<Index> out;
    out.reserve(weights_.size());
    for (const auto& entry : weights_) out.push_back(entry.first);
    return out;
}

Rational FiniteMeasure::mass() const {
    Rational total;
    for (const auto& entry : weights_) total += entry.second;
    return total;
}

Index FiniteMeasure::max_index() const {
    if (weights_.empty()) throw std::logic_error("max_index of empty measure");
    return weights_.rbegin()->first;
}

FiniteMeasure FiniteMeasure::scaled(const Rational& factor) const {
    if (factor.sign() < 0) throw std::domain_error("negative scale factor " + factor.to_string());
    FiniteMeasure out;
    if (factor.is_zero()) return out;
    for (const auto& [index, w] : weights_) out.weights_.emplace(index, w * factor);
    return out;
}

FiniteMeasure& FiniteMeasure::operator+=(const FiniteMeasure& rhs) {
    for (const auto& [index, w] : rhs.weights_) add(index, w);
    return *this;
}

std::string FiniteMeasure::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [index, w] : weights_) {
        if (!first) os << ", ";
        first = false;
        os << index << ": " << w;
    }
    os << '}';
    return os.str();
}

FiniteMeasure point_mass(Index index) {
    FiniteMeasure out;
    out.add(index, Rational(1));
    return out;
}

}  // namespace hyperconvo
