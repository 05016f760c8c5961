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

#ifndef HYPERCONVO_DEFORMATION_HPP
#define HYPERCONVO_DEFORMATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperconvo/convolution.hpp"
#include "hyperconvo/measure.hpp"
#include "hyperconvo/rational.hpp"
#include "hyperconvo/semigroup.hpp"

namespace hyperconvo {

/// Haar-weight parameterization of a hermitian deformation of a max chain:
/// v_0 = 1 and v_n >= v_0 + ... + v_{n-1} for n >= 1.
class VSequence {
public:
    /// Throws ValidationError whose witness is the first failing index.
    static VSequence create(std::vector<Rational> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return values_.at(n); }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    /// v_0 + ... + v_{n-1}.
    [[nodiscard]] Rational lower_sum(std::size_t n) const;
    /// First `count` entries.
    [[nodiscard]] VSequence prefix(std::size_t count) const;

    friend bool operator==(const VSequence&, const VSequence&) = default;

private:
    std::vector<Rational> values_;
};

/// Excess sequence u_n = v_n - (v_0 + ... + v_{n-1}) >= 0, indexed from 1.
class USequence {
public:
    /// `values[i]` is u_{i+1}. Throws ValidationError naming the index n of a
    /// negative u_n.
    static USequence create(std::vector<Rational> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    /// u_n for 1 <= n <= size().
    [[nodiscard]] const Rational& at(std::size_t n) const;
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const USequence&, const USequence&) = default;

private:
    std::vector<Rational> values_;
};

[[nodiscard]] VSequence v_from_u(const USequence& u);
[[nodiscard]] USequence u_from_v(const VSequence& v);

/// u of length `length` with u_n = 0 exactly at the given positions and 1
/// elsewhere, so the deformation has Q_n = L_n precisely at those n.
[[nodiscard]] USequence u_with_prescribed_zeros(std::size_t length, const std::vector<std::size_t>& zero_positions);

/// v_0 = 1, v_n = (1 - a) / a^n, n = 1..window. Requires 0 < a <= 1/2.
[[nodiscard]] VSequence dunkl_ramirez_v(const Rational& a, std::size_t window);

/// A semigroup together with a choice of q_n = δ_n * δ_n for every
/// non-identity idempotent n. Indices are base-table indices.
class DeformationSpec {
public:
    /// Throws ValidationError unless every q_n is a probability measure on
    /// non-sentinel elements with the identity in its support, and keys are
    /// exactly E_0(S).
    DeformationSpec(SemigroupTable base, std::map<Index, FiniteMeasure> q);

    [[nodiscard]] const SemigroupTable& base() const { return base_; }
    [[nodiscard]] const std::map<Index, FiniteMeasure>& q() const { return q_; }
    [[nodiscard]] const FiniteMeasure& q(Index n) const;

    /// δ_m * δ_n = δ_{mn} off the idempotent diagonal, q_n on it.
    [[nodiscard]] ConvolutionStructure structure() const;

private:
    SemigroupTable base_;
    std::map<Index, FiniteMeasure> q_;
};

/// q_n along the idempotent chain c_0 < c_1 < ...: q_{c_i}(c_j) = v_j / v_i
/// for j < i and q_{c_i}(c_i) = u_i / v_i. Requires a chain and v.size() >=
/// chain length; does not check the remaining hypotheses.
[[nodiscard]] DeformationSpec spec_from_chain(const SemigroupTable& s, const VSequence& v);

/// Deformation of ({0..window}, max) determined by v.
[[nodiscard]] ConvolutionStructure build_max_deformation(const VSequence& v, std::size_t window);

/// Throws std::invalid_argument unless 0 < a <= 1/2.
[[nodiscard]] ConvolutionStructure build_dunkl_ramirez(const Rational& a, std::size_t window);

/// Deforms the idempotent diagonal of an action-free commutative monoid
/// whose idempotents form a chain. Throws PreconditionError naming the
/// violated hypothesis.
[[nodiscard]] ConvolutionStructure build_general_deformation(const SemigroupTable& s, const VSequence& v_on_chain);

/// Chebyshev polynomial hypergroups of the first (kind 1) and second (kind 2)
/// kind on {0..window}; products with m + n > window are undefined.
[[nodiscard]] ConvolutionStructure build_chebyshev(int kind, std::size_t window);

enum class ConditionStatus { pass, fail, vacuous };

[[nodiscard]] std::string_view to_string(ConditionStatus status);

struct ConditionResult {
    std::string id;
    std::string description;
    ConditionStatus status = ConditionStatus::pass;
    /// Base-table indices; the lexicographically least violation.
    std::vector<Index> witness;
    std::string detail;

    [[nodiscard]] bool ok() const { return status != ConditionStatus::fail; }
};

struct ConditionReport {
    std::vector<ConditionResult> conditions;
    /// Which elements and pairs the checks quantified over.
    std::string domain;
    bool window_limited = false;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] const ConditionResult& at(std::string_view id) const;
    [[nodiscard]] std::vector<std::string> failed() const;
};

/// Conditions for a max semigroup window (E(S) = S, linearly ordered):
/// "finite_chain", "support_sandwich", "product_rule", "weight_budget" and
/// the v-form rewording "v_product_rule", "v_budget".
/// Throws PreconditionError when the base is not a max chain.
[[nodiscard]] ConditionReport check_max_conditions(const DeformationSpec& spec);

/// Conditions for a general commutative monoid: "action_free",
/// "idempotent_chain", "nonidempotent_ideal", "supports_in_idempotents",
/// "absorbing_products", "support_sandwich", "product_rule" and
/// "weight_budget".
[[nodiscard]] ConditionReport check_main_conditions(const DeformationSpec& spec);

}  // namespace hyperconvo

#endif  // HYPERCONVO_DEFORMATION_HPP
