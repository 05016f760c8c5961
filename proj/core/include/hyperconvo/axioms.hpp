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

#ifndef HYPERCONVO_AXIOMS_HPP
#define HYPERCONVO_AXIOMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperconvo/convolution.hpp"
#include "hyperconvo/deformation.hpp"
#include "hyperconvo/measure.hpp"
#include "hyperconvo/rational.hpp"

namespace hyperconvo {

struct AssociativityCounterexample {
    Index m = 0;
    Index n = 0;
    Index k = 0;
    FiniteMeasure lhs;  // (δ_m * δ_n) * δ_k
    FiniteMeasure rhs;  // δ_m * (δ_n * δ_k)
};

/// Result of exhaustive axiom checking on a window. Every witness is the
/// lexicographically least violation. Triples or pairs that need a product
/// outside the window are skipped and counted.
struct VerificationReport {
    bool probability = true;  // every defined δ_m * δ_n has mass 1
    std::optional<std::pair<Index, Index>> probability_witness;
    bool identity = true;
    std::optional<Index> identity_witness;
    bool commutative = true;
    std::optional<std::pair<Index, Index>> commutativity_witness;
    bool associativity = true;
    std::optional<AssociativityCounterexample> counterexample;

    bool hypergroup_checked = false;
    bool hermitian = false;
    bool involution_adjoint = true;  // (δ_m * δ_n)^ = δ_ň * δ_m̌
    std::optional<std::pair<Index, Index>> adjoint_witness;
    bool support_axiom = true;  // e in spt(δ_m * δ_ň) iff m = n
    std::optional<std::pair<Index, Index>> support_witness;

    std::size_t elements = 0;
    std::size_t triples_checked = 0;
    std::size_t triples_skipped = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;

    [[nodiscard]] bool window_limited() const { return triples_skipped > 0 || pairs_skipped > 0; }
    [[nodiscard]] bool semiconvo_ok() const { return probability && identity && associativity; }
    [[nodiscard]] bool hypergroup_ok() const { return semiconvo_ok() && involution_adjoint && support_axiom; }
    [[nodiscard]] bool ok() const { return hypergroup_checked ? hypergroup_ok() : semiconvo_ok(); }
    [[nodiscard]] std::string domain() const;
};

/// Checks probability, two-sided identity and associativity on all triples.
[[nodiscard]] VerificationReport verify_semiconvo(const ConvolutionStructure& k);
/// Same, restricted to elements 0..window.
[[nodiscard]] VerificationReport verify_semiconvo(const ConvolutionStructure& k, Index window);

/// verify_semiconvo plus the involution axioms on all pairs.
[[nodiscard]] VerificationReport verify_hypergroup(const ConvolutionStructure& k);
[[nodiscard]] VerificationReport verify_hypergroup(const ConvolutionStructure& k, Index window);

/// λ(e) = 1, λ(n) = 1 / (δ_n * δ_n)(e). Entries whose diagonal product is
/// outside the window are absent.
class HaarVector {
public:
    explicit HaarVector(std::vector<std::optional<Rational>> weights) : weights_(std::move(weights)) {}

    [[nodiscard]] std::size_t size() const { return weights_.size(); }
    [[nodiscard]] bool defined(Index n) const { return n < weights_.size() && weights_[n].has_value(); }
    /// Throws std::out_of_range when undefined.
    [[nodiscard]] const Rational& at(Index n) const;
    [[nodiscard]] const std::vector<std::optional<Rational>>& weights() const { return weights_; }
    /// Largest L with λ defined on 0..L.
    [[nodiscard]] std::size_t defined_prefix() const;

private:
    std::vector<std::optional<Rational>> weights_;
};

/// Throws PreconditionError if the structure is not hermitian or some
/// (δ_n * δ_n)(e) vanishes.
[[nodiscard]] HaarVector haar(const ConvolutionStructure& k);

struct HaarInvarianceReport {
    bool ok = true;
    std::optional<std::pair<Index, Index>> witness;  // (n, k)
    Rational lhs;  // sum_m λ(m) (δ_m * δ_n)(k) at the witness
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;
};

/// Checks sum_m λ(m) (δ_m * δ_n)(k) = λ(k) for all n, k. A pair (n, k) is
/// checked when every δ_m * δ_n with m <= n + k is inside the window and λ is
/// defined there; terms with m > n + k vanish: spt(δ_m * δ_n) lies in
/// [m - n, m + n] for every structure the library builds.
[[nodiscard]] HaarInvarianceReport verify_haar_invariance(const ConvolutionStructure& k, const HaarVector& lambda);

/// The five conditions that are equivalent for a commutative semiconvo
/// deformation. Each is evaluated independently on the base semigroup.
struct EquivalenceReport {
    bool supports_in_idempotents = false;  // Q_n ⊂ E(S) for n in E_0(S)
    bool idempotents_max_min = false;      // (E(S), .) is max-min type
    bool inverse_free = false;
    bool action_free = false;              // G_1(S) = {e}
    bool no_fixed_products = false;        // n != nm for n in E_0(S), m in S \ E(S)
    std::vector<std::string> witnesses;    // one line per failing condition

    [[nodiscard]] bool agreement() const;
    [[nodiscard]] bool all_true() const;
    [[nodiscard]] std::vector<bool> values() const;
};

[[nodiscard]] EquivalenceReport check_equivalence_conditions(const DeformationSpec& spec);

/// Restriction of a deformation to the idempotents of its base semigroup.
/// Throws PreconditionError if the structure has no base or some product of
/// idempotents charges a non-idempotent.
[[nodiscard]] ConvolutionStructure extract_idempotent_hypergroup(const ConvolutionStructure& k);

}  // namespace hyperconvo

#endif  // HYPERCONVO_AXIOMS_HPP
