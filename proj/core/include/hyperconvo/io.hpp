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

#ifndef HYPERCONVO_IO_HPP
#define HYPERCONVO_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hyperconvo/axioms.hpp"
#include "hyperconvo/convolution.hpp"
#include "hyperconvo/deformation.hpp"
#include "hyperconvo/duality.hpp"
#include "hyperconvo/semigroup.hpp"

namespace hyperconvo {

inline constexpr std::string_view kSchema = "hyperconvo/1";

/// A validated input document.
///
/// Accepted "type" values:
///   semigroup      inline table or {"example": name, "window": W}
///   deformation    {"base": ..., "v" | "u" | "q": ...}
///   dunkl_ramirez  {"a": "1/3", "window": N}
///   chebyshev      {"kind": 1 | 2, "window": N}
struct ParsedInput {
    std::string type;
    std::optional<SemigroupTable> semigroup;
    std::optional<DeformationSpec> spec;
    /// Chain weights, when the document determines them.
    std::optional<VSequence> v;
    std::optional<Rational> a;
    std::optional<int> chebyshev_kind;
    std::size_t window = 0;
    std::optional<ConvolutionStructure> structure;
};

/// Throws ValidationError whose location() is a JSON pointer. Relative base
/// paths resolve against `directory`.
[[nodiscard]] ParsedInput parse_input(const nlohmann::json& doc, const std::filesystem::path& directory = {});

/// Reads and parses a file. Throws std::runtime_error if it cannot be read
/// and ValidationError for malformed JSON or invalid content.
[[nodiscard]] ParsedInput parse_input_file(const std::filesystem::path& path);

[[nodiscard]] SemigroupTable parse_semigroup(const nlohmann::json& doc, const std::string& pointer = "");

/// 64-bit FNV-1a digest, lowercase hex.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

struct JsonOptions {
    /// Adds display-only decimal strings next to rational values.
    std::optional<int> decimal_digits;
};

[[nodiscard]] nlohmann::json to_json(const Rational& value);
[[nodiscard]] nlohmann::json to_json(const FiniteMeasure& mu, const std::vector<std::string>& names,
                                     const JsonOptions& options = {});
[[nodiscard]] nlohmann::json to_json(const SemigroupTable& s);
[[nodiscard]] nlohmann::json to_json(const SemigroupTable& s, const Classification& c);
[[nodiscard]] nlohmann::json to_json(const ConvolutionStructure& k, const JsonOptions& options = {});
[[nodiscard]] nlohmann::json to_json(const DeformationSpec& spec, const ConditionReport& report);
[[nodiscard]] nlohmann::json to_json(const ConvolutionStructure& k, const VerificationReport& report);
[[nodiscard]] nlohmann::json to_json(const ConvolutionStructure& k, const HaarVector& lambda,
                                     const HaarInvarianceReport& report, const JsonOptions& options = {});
[[nodiscard]] nlohmann::json to_json(const DualMeasure& mu, const JsonOptions& options = {});
[[nodiscard]] nlohmann::json to_json(const EquivalenceReport& report);

}  // namespace hyperconvo

#endif  // HYPERCONVO_IO_HPP
