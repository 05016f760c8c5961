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

#ifndef HYPERCONVO_DUALITY_HPP
#define HYPERCONVO_DUALITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperconvo/convolution.hpp"
#include "hyperconvo/deformation.hpp"
#include "hyperconvo/measure.hpp"
#include "hyperconvo/rational.hpp"

namespace hyperconvo {

/// A point of the dual of a max deformation: a character index k in Z_+ or
/// the symbolic point at infinity (the constant character).
class DualPoint {
public:
    static DualPoint finite(Index k) { return DualPoint(k); }
    static DualPoint infinity() { return DualPoint(); }
    /// Accepts a decimal index or "inf".
    static DualPoint parse(const std::string& text);

    [[nodiscard]] bool is_infinite() const { return !index_.has_value(); }
    /// Throws std::logic_error at infinity.
    [[nodiscard]] Index index() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DualPoint&, const DualPoint&) = default;
    /// Finite points in index order, infinity last.
    friend bool operator<(const DualPoint& lhs, const DualPoint& rhs);

private:
    DualPoint() = default;
    explicit DualPoint(Index k) : index_(k) {}

    std::optional<Index> index_;
};

[[nodiscard]] DualPoint min(const DualPoint& a, const DualPoint& b);

/// β_0..β_{N-1} with -1 <= β_k < 0.
class BetaSequence {
public:
    /// Throws ValidationError naming the first out-of-range index.
    static BetaSequence create(std::vector<Rational> values);

    [[nodiscard]] std::size_t size() const { return values_.size(); }
    /// Throws TruncationError past the end.
    [[nodiscard]] const Rational& operator[](std::size_t k) const;
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

/// A dual computation needed a β index the sequence does not reach.
class TruncationError : public std::out_of_range {
public:
    TruncationError(const std::string& what, std::size_t needed)
        : std::out_of_range(what), needed_(needed) {}
    [[nodiscard]] std::size_t needed() const { return needed_; }

private:
    std::size_t needed_;
};

/// β_k = -(v_0 + ... + v_k) / v_{k+1} for k = 0..v.size()-2.
[[nodiscard]] BetaSequence beta_sequence(const VSequence& v);

/// χ_k(n) for one character and point.
[[nodiscard]] Rational character_value(const BetaSequence& beta, const DualPoint& k, Index n);

/// Rows χ_0..χ_{N-1} and χ_∞, columns n = 0..N.
class CharacterTable {
public:
    CharacterTable(const BetaSequence& beta, std::size_t n);

    [[nodiscard]] std::size_t points() const { return points_; }
    [[nodiscard]] const std::vector<DualPoint>& labels() const { return labels_; }
    [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    [[nodiscard]] const std::vector<Rational>& row(std::size_t r) const { return rows_.at(r); }

private:
    std::size_t points_ = 0;
    std::vector<DualPoint> labels_;
    std::vector<std::vector<Rational>> rows_;
};

/// Requires v.size() >= N + 1.
[[nodiscard]] CharacterTable character_table(const VSequence& v, std::size_t n);

struct CharacterCheck {
    bool ok = true;
    std::optional<std::pair<Index, Index>> witness;
    Rational lhs;  // χ(m * n) at the witness
    Rational rhs;  // χ(m) χ(n) at the witness
    std::size_t pairs_checked = 0;
    std::size_t pairs_skipped = 0;
};

/// Checks χ(δ_m * δ_n) = χ(m) χ(n) for m, n < chi.size(). Pairs whose product
/// is undefined or charges points outside chi are skipped and counted.
[[nodiscard]] CharacterCheck verify_character(const std::vector<Rational>& chi, const ConvolutionStructure& k);

/// All characters of a hermitian deformation of (Z_k, max), k <= 12, found
/// by the cutoff case analysis and then verified exhaustively. Sorted by the
/// position of the first entry different from 1, constant character last.
[[nodiscard]] std::vector<std::vector<Rational>> enumerate_characters_bruteforce(const ConvolutionStructure& k);

/// δ_{χ_m} * δ_{χ_n} restricted to finitely many dual points, with the
/// omitted mass accounted for exactly.
struct DualMeasure {
    DualPoint m = DualPoint::infinity();
    DualPoint n = DualPoint::infinity();
    FiniteMeasure gamma;     // finite dual points
    Rational at_infinity;    // γ_∞
    Rational tail_mass;      // mass on finite points past last_retained
    std::optional<Index> last_retained;
    /// γ_m^m > 0, i.e. χ_m itself is in the support; false only when u_{m+1} = 0.
    bool diagonal_charged = false;

    [[nodiscard]] Rational total() const;
};

/// Closed form: the min rule off the diagonal, and for m = n finite
/// γ_m = 1 + β_m, γ_{m+p} = prod_{j=m}^{m+p-1} (-β_j) / (1 - β_{j+1}) for
/// p = 1..P, tail = -γ_{m+P} β_{m+P}. Throws TruncationError when β is short.
[[nodiscard]] DualMeasure dual_convolution_closed(const DualPoint& m, const DualPoint& n, const BetaSequence& beta,
                                                  std::size_t p);

/// Diagonal case by forward substitution on the evaluation system at the
/// points t = 1..m+P+1; the tail is 1 minus the retained mass.
[[nodiscard]] DualMeasure dual_convolution_solve(Index m, const BetaSequence& beta, std::size_t p);

struct TransportCheck {
    bool ok = true;
    std::optional<Index> witness;  // point t
    std::size_t points_checked = 0;
    std::string domain;
};

/// Checks χ_m(t) χ_n(t) = sum_j γ_j χ_j(t) + tail + γ_∞ for t = 0..max_point
/// where every omitted character equals 1 at t.
[[nodiscard]] TransportCheck verify_dual_transport(const DualMeasure& mu, const BetaSequence& beta,
                                                   std::size_t max_point);

/// Rows ξ_0..ξ_N over dual points k = 0..N-1 and ∞ (last column).
struct DoubleDualTable {
    std::vector<DualPoint> columns;
    std::vector<std::vector<Rational>> rows;
};

/// ξ_0 = 1; for n >= 1, ξ_n(k) = 0 for k < n-1, β_{n-1} at k = n-1, 1 for
/// k >= n and at ∞.
[[nodiscard]] DoubleDualTable double_dual_table(const BetaSequence& beta, std::size_t n);

struct FiniteDual {
    /// characters[i] is the value vector of dual element i; the constant
    /// character is last and is the identity.
    std::vector<std::vector<Rational>> characters;
    ConvolutionStructure structure;
};

/// Dual of a hermitian deformation of (Z_k, max), k <= 16. Each product of
/// characters is expanded in the character basis by exact elimination.
/// Throws PreconditionError if the expansion is singular or has a negative
/// coefficient.
[[nodiscard]] FiniteDual finite_dual(const ConvolutionStructure& k);

}  // namespace hyperconvo

#endif  // HYPERCONVO_DUALITY_HPP
