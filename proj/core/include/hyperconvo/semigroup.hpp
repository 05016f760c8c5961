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

#ifndef HYPERCONVO_SEMIGROUP_HPP
#define HYPERCONVO_SEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperconvo/measure.hpp"

namespace hyperconvo {

/// A finite commutative monoid given by its Cayley table.
///
/// Infinite semigroups are represented on a finite window: products that
/// leave the window are mapped to an absorbing sentinel element. Every check
/// in the library quantifies only over sentinel-avoiding products.
///
/// Construction validates the identity law, sentinel absorption,
/// commutativity and associativity (on sentinel-avoiding triples), so a
/// SemigroupTable value is always a valid commutative monoid window.
class SemigroupTable {
public:
    /// Throws ValidationError naming a witness pair or triple.
    static SemigroupTable create(std::vector<std::string> names, Index identity,
                                 std::vector<std::vector<Index>> table,
                                 std::optional<Index> sentinel = std::nullopt);

    /// Number of table rows, sentinel included.
    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] Index identity() const { return identity_; }
    [[nodiscard]] const std::optional<Index>& sentinel() const { return sentinel_; }
    [[nodiscard]] bool is_sentinel(Index m) const { return sentinel_ && *sentinel_ == m; }
    [[nodiscard]] Index product(Index m, Index n) const { return table_[m * size() + n]; }
    [[nodiscard]] const std::string& name(Index m) const { return names_.at(m); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] std::optional<Index> find(std::string_view name) const;
    /// All non-sentinel elements in index order.
    [[nodiscard]] std::vector<Index> elements() const;
    /// Associativity triples skipped at validation because a partial product
    /// hit the sentinel.
    [[nodiscard]] std::size_t window_limited_triples() const { return window_limited_triples_; }
    [[nodiscard]] std::vector<std::vector<Index>> rows() const;

    /// Sub-monoid on `subset` (must contain the identity and be closed under
    /// sentinel-avoiding products). Element i of the result is subset[i].
    [[nodiscard]] SemigroupTable restrict_to(const std::vector<Index>& subset) const;

private:
    SemigroupTable() = default;

    std::vector<std::string> names_;
    Index identity_ = 0;
    std::vector<Index> table_;
    std::optional<Index> sentinel_;
    std::size_t window_limited_triples_ = 0;
};

/// Structural data of a commutative monoid. The sentinel is excluded from
/// every set.
struct Classification {
    std::vector<Index> idempotents;              // E(S)
    std::vector<Index> nonidentity_idempotents;  // E_0(S)
    std::vector<Index> maximal_group;            // G(S)
    std::vector<Index> acting_units;             // G_1(S)
    std::vector<Index> non_idempotents;          // S \ E(S)
    bool inverse_free = false;
    bool action_free = false;
    bool max_min_type = false;
    bool non_idempotents_ideal = false;
    bool non_idempotents_prime_ideal = false;
    /// Some product scanned during classification hit the sentinel.
    bool window_limited = false;
};

[[nodiscard]] Classification classify(const SemigroupTable& s);

/// Least j with m^j idempotent, or nullopt when the powers of m leave the
/// window before reaching an idempotent.
[[nodiscard]] std::optional<std::size_t> element_order(const SemigroupTable& s, Index m);

/// E(S) ordered by m < n iff mn = n != m, when (E(S), .) is max-min type.
struct IdempotentChain {
    std::vector<Index> order;  // increasing; order.front() is the identity
    std::optional<std::pair<Index, Index>> witness;  // m, n with mn not in {m, n}

    [[nodiscard]] bool is_chain() const { return !witness.has_value(); }
    /// Position of an idempotent in the chain.
    [[nodiscard]] std::optional<std::size_t> rank(Index m) const;
};

[[nodiscard]] IdempotentChain idempotent_chain(const SemigroupTable& s);

struct IdealCheck {
    bool is_subsemigroup = false;
    bool is_ideal = false;
    bool is_prime_ideal = false;
    std::optional<std::pair<Index, Index>> subsemigroup_witness;
    std::optional<std::pair<Index, Index>> ideal_witness;
    std::optional<std::pair<Index, Index>> prime_witness;  // complement not closed
};

/// Throws ValidationError for an empty subset or one containing the sentinel.
[[nodiscard]] IdealCheck check_ideal(const SemigroupTable& s, const std::vector<Index>& subset);

/// Parameters of the built-in example tables.
///
/// zmax:   (Z_k, max) with k = window.
/// zplus:  ({0..window}, max).
/// zgroup: (Z_k, + mod k) with k = window.
/// zplus_unit: (Z_+ x {0}) u {(0,1)}, first coordinate 0..window.
/// zmax_z2: (Z_+, max) x (Z_2, +), first coordinate 0..window.
/// maxsum: T u N with T = {1 - 1/(r+1)}, r = 0..window, N = 1..additive_window;
///         max if either factor is in T, m + n on N, sentinel past the window.
struct ExampleParams {
    std::size_t window = 8;
    std::size_t additive_window = 6;
};

/// Throws std::invalid_argument for unknown names or window < 2.
[[nodiscard]] SemigroupTable build_named_example(std::string_view name, const ExampleParams& params = {});
[[nodiscard]] std::vector<std::string> named_examples();

}  // namespace hyperconvo

#endif  // HYPERCONVO_SEMIGROUP_HPP
