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

#ifndef HYPERCONVO_TESTS_COMPARE_HPP
#define HYPERCONVO_TESTS_COMPARE_HPP

#include <string>

#include "hyperconvo/measure.hpp"
#include "oracles.hpp"

namespace oracle {

inline bool matches(const hyperconvo::FiniteMeasure& mu, const Dense& expected) {
    if (mu.support_size() != expected.size()) return false;
    for (const auto& [index, w] : expected) {
        if (mu.weight(index).raw() != w) return false;
    }
    return true;
}

inline std::string describe(const Dense& d) {
    std::string out = "{";
    for (const auto& [index, w] : d) {
        if (out.size() > 1) out += ", ";
        out += std::to_string(index) + ": " + w.get_str();
    }
    return out + "}";
}

}  // namespace oracle

#endif  // HYPERCONVO_TESTS_COMPARE_HPP
