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

#include <doctest.h>

#include <random>

#include "compare.hpp"
#include "hyperconvo/axioms.hpp"
#include "hyperconvo/deformation.hpp"
#include "hyperconvo/duality.hpp"
#include "hyperconvo/errors.hpp"

using namespace hyperconvo;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(Rational::parse(t));
    return out;
}

VSequence vseq(std::initializer_list<const char*> texts) { return VSequence::create(rationals(texts)); }

// Diagonal dual product by the product formula, straight from v.
oracle::Dense closed_gamma(const std::vector<oracle::Q>& v, std::size_t m, std::size_t p, oracle::Q& tail) {
    oracle::Dense out;
    out[m] = 1 + oracle::beta(v, m);
    oracle::Q running = 1;
    for (std::size_t j = m; j < m + p; ++j) {
        running *= -oracle::beta(v, j) / (1 - oracle::beta(v, j + 1));
        out[j + 1] = running;
    }
    tail = -running * oracle::beta(v, m + p);
    if (p == 0) tail = -oracle::beta(v, m);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("dual points order finite indices before infinity") {
    CHECK(DualPoint::parse("3") == DualPoint::finite(3));
    CHECK(DualPoint::parse("inf").is_infinite());
    CHECK(DualPoint::parse("∞").is_infinite());
    CHECK(DualPoint::finite(2) < DualPoint::finite(5));
    CHECK(DualPoint::finite(100) < DualPoint::infinity());
    CHECK_FALSE(DualPoint::infinity() < DualPoint::infinity());
    CHECK(min(DualPoint::infinity(), DualPoint::finite(4)) == DualPoint::finite(4));
    CHECK(DualPoint::infinity().to_string() == "inf");
    CHECK_THROWS_AS((void)DualPoint::infinity().index(), std::logic_error);
    CHECK_THROWS((void)DualPoint::parse("x"));
}

TEST_CASE("beta sequence from v") {
    CHECK(beta_sequence(vseq({"1", "2", "3", "6"})).values() == rationals({"-1/2", "-1", "-1"}));
    const BetaSequence third = beta_sequence(dunkl_ramirez_v(Rational(1, 3), 12));
    for (std::size_t k = 0; k < third.size(); ++k) CHECK(third[k] == Rational(-1, 2));
    try {
        (void)third[12];
        FAIL("expected truncation");
    } catch (const TruncationError& e) {
        CHECK(e.needed() == 12);
    }
    CHECK_THROWS_AS((void)BetaSequence::create(rationals({"-1/2", "0"})), ValidationError);
    CHECK_THROWS_AS((void)BetaSequence::create(rationals({"-3/2"})), ValidationError);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = oracle::random_v(rng, 10);
        const BetaSequence beta = beta_sequence(VSequence::create(oracle::to_rationals(v)));
        REQUIRE(beta.size() == 9);
        for (std::size_t k = 0; k < 9; ++k) CHECK(oracle::same(beta[k], oracle::beta(v, k)));
    }
}

TEST_CASE("character table at a = 1/3") {
    const CharacterTable t = character_table(dunkl_ramirez_v(Rational(1, 3), 6), 5);
    CHECK(t.points() == 6);
    REQUIRE(t.labels().size() == 6);
    CHECK(t.labels().back().is_infinite());
    CHECK(t.row(1) == rationals({"1", "1", "-1/2", "0", "0", "0"}));
    CHECK(t.row(0) == rationals({"1", "-1/2", "0", "0", "0", "0"}));
    CHECK(t.row(5) == rationals({"1", "1", "1", "1", "1", "1"}));
    CHECK_THROWS((void)character_table(dunkl_ramirez_v(Rational(1, 3), 3), 5));
}

TEST_CASE("characters are multiplicative and a wrong sign is caught") {
    const VSequence v = dunkl_ramirez_v(Rational(1, 3), 8);
    const ConvolutionStructure k = build_max_deformation(v, 8);
    const CharacterTable t = character_table(v, 8);
    for (const auto& row : t.rows()) CHECK(verify_character(row, k).ok);

    std::vector<Rational> wrong = t.row(1);
    wrong[2] = Rational(1, 2);
    const CharacterCheck c = verify_character(wrong, k);
    CHECK_FALSE(c.ok);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == std::make_pair(Index{2}, Index{2}));
    CHECK(c.lhs == Rational(3, 4));
    CHECK(c.rhs == Rational(1, 4));
}

TEST_CASE("brute-force enumeration on a three element chain") {
    const ConvolutionStructure k = build_max_deformation(vseq({"1", "1", "2"}), 2);
    const auto chars = enumerate_characters_bruteforce(k);
    REQUIRE(chars.size() == 3);
    CHECK(chars[0] == rationals({"1", "-1", "0"}));
    CHECK(chars[1] == rationals({"1", "1", "-1"}));
    CHECK(chars[2] == rationals({"1", "1", "1"}));
}

TEST_CASE("brute-force enumeration matches the closed form on random chains") {
    std::mt19937_64 rng(4242);
    for (std::size_t size = 2; size <= 8; ++size) {
        const auto v = oracle::random_v(rng, size);
        const auto chars = enumerate_characters_bruteforce(build_max_deformation(VSequence::create(oracle::to_rationals(v)), size - 1));
        REQUIRE(chars.size() == size);
        for (std::size_t r = 0; r + 1 < size; ++r) {
            for (std::size_t n = 0; n < size; ++n) CHECK(oracle::same(chars[r][n], oracle::character(v, r, n)));
        }
        for (const Rational& x : chars.back()) CHECK(x == Rational(1));
    }
    CHECK_THROWS_AS((void)enumerate_characters_bruteforce(build_chebyshev(1, 4)), PreconditionError);
}

TEST_CASE("diagonal dual convolution agrees with the product formula and the solver") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        const auto v = oracle::random_v(rng, 16);
        const BetaSequence beta = beta_sequence(VSequence::create(oracle::to_rationals(v)));
        for (std::size_t m = 0; m < 5; ++m) {
            for (std::size_t p = 1; p <= 8; ++p) {
                oracle::Q tail;
                const oracle::Dense expected = closed_gamma(v, m, p, tail);
                const DualMeasure closed = dual_convolution_closed(DualPoint::finite(m), DualPoint::finite(m), beta, p);
                CHECK(oracle::matches(closed.gamma, expected));
                CHECK(oracle::same(closed.tail_mass, tail));
                CHECK(closed.at_infinity.is_zero());
                CHECK(closed.total() == Rational(1));
                CHECK(closed.last_retained == std::optional<Index>(m + p));

                const DualMeasure solved = dual_convolution_solve(m, beta, p);
                CHECK(solved.gamma == closed.gamma);
                CHECK(solved.tail_mass == closed.tail_mass);
                CHECK(verify_dual_transport(solved, beta, m + p + 1).ok);
            }
        }
    }
}

TEST_CASE("dual convolution at a = 1/3 decays by thirds") {
    const BetaSequence beta = beta_sequence(dunkl_ramirez_v(Rational(1, 3), 20));
    const DualMeasure mu = dual_convolution_closed(DualPoint::finite(2), DualPoint::finite(2), beta, 6);
    CHECK(mu.gamma.weight(2) == Rational(1, 2));
    for (std::size_t p = 1; p <= 6; ++p) CHECK(mu.gamma.weight(2 + p) == Rational(1, 3).pow(static_cast<int>(p)));
    CHECK(mu.tail_mass == Rational(1, 2) * Rational(1, 3).pow(6));
    CHECK(mu.diagonal_charged);
    CHECK(mu.gamma.weight(1).is_zero());
}

TEST_CASE("off-diagonal and infinite dual products follow the min rule") {
    const BetaSequence beta = beta_sequence(dunkl_ramirez_v(Rational(1, 2), 10));
    const DualMeasure a = dual_convolution_closed(DualPoint::finite(2), DualPoint::finite(5), beta, 4);
    CHECK(a.gamma == point_mass(2));
    CHECK(a.tail_mass.is_zero());
    const DualMeasure b = dual_convolution_closed(DualPoint::finite(3), DualPoint::infinity(), beta, 4);
    CHECK(b.gamma == point_mass(3));
    const DualMeasure c = dual_convolution_closed(DualPoint::infinity(), DualPoint::infinity(), beta, 4);
    CHECK(c.gamma.empty());
    CHECK(c.at_infinity == Rational(1));
    for (const DualMeasure* mu : {&a, &b, &c}) CHECK(verify_dual_transport(*mu, beta, 9).ok);
}

TEST_CASE("a zero excess removes the diagonal atom") {
    // u_2 = 0 makes β_1 = -1, so γ_1 = 1 + β_1 = 0.
    const BetaSequence beta = beta_sequence(v_from_u(u_with_prescribed_zeros(8, {2})));
    CHECK(beta[1] == Rational(-1));
    const DualMeasure mu = dual_convolution_closed(DualPoint::finite(1), DualPoint::finite(1), beta, 4);
    CHECK_FALSE(mu.diagonal_charged);
    CHECK_FALSE(mu.gamma.contains(1));
    CHECK(mu.total() == Rational(1));
}

TEST_CASE("short beta sequences report the needed index") {
    const BetaSequence beta = beta_sequence(dunkl_ramirez_v(Rational(1, 3), 6));
    CHECK_THROWS_AS((void)dual_convolution_closed(DualPoint::finite(4), DualPoint::finite(4), beta, 4), TruncationError);
    CHECK_THROWS_AS((void)dual_convolution_solve(4, beta, 4), TruncationError);
}

TEST_CASE("double dual rows") {
    const DoubleDualTable t = double_dual_table(beta_sequence(dunkl_ramirez_v(Rational(1, 3), 8)), 5);
    REQUIRE(t.rows.size() == 6);
    REQUIRE(t.columns.size() == 6);
    CHECK(t.columns.back().is_infinite());
    CHECK(t.rows[0] == rationals({"1", "1", "1", "1", "1", "1"}));
    CHECK(t.rows[2] == rationals({"0", "-1/2", "1", "1", "1", "1"}));
    CHECK(t.rows[5] == rationals({"0", "0", "0", "0", "-1/2", "1"}));
}

TEST_CASE("finite dual of a three element chain") {
    const FiniteDual d = finite_dual(build_max_deformation(vseq({"1", "1", "2"}), 2));
    REQUIRE(d.characters.size() == 3);
    CHECK(d.structure.identity() == 2);
    const FiniteMeasure& square = *d.structure.product(0, 0);
    CHECK(square == FiniteMeasure::from_weights({{1, Rational(1, 2)}, {2, Rational(1, 2)}}));
    CHECK(*d.structure.product(0, 1) == point_mass(0));
    CHECK(verify_semiconvo(d.structure).ok());
}

TEST_CASE("finite duals are hypergroups") {
    std::mt19937_64 rng(77);
    for (std::size_t size = 2; size <= 8; ++size) {
        const auto v = oracle::random_v(rng, size);
        const FiniteDual d = finite_dual(build_max_deformation(VSequence::create(oracle::to_rationals(v)), size - 1));
        CAPTURE(size);
        CHECK(verify_hypergroup(d.structure).ok());
    }
}

TEST_CASE("characters are orthogonal for the Haar weights") {
    std::mt19937_64 rng(5);
    const VSequence v = VSequence::create(oracle::to_rationals(oracle::random_v(rng, 13)));
    const HaarVector lambda = haar(build_max_deformation(v, 12));
    const CharacterTable t = character_table(v, 12);
    for (std::size_t i = 0; i < 11; ++i) {
        for (std::size_t j = i + 1; j < 11; ++j) {
            Rational sum;
            for (Index n = 0; n <= 12; ++n) sum += lambda.at(n) * t.row(i)[n] * t.row(j)[n];
            CHECK(sum.is_zero());
        }
    }
}
