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
#include "hyperconvo/errors.hpp"

using namespace hyperconvo;

namespace {

std::size_t witness_of(const std::vector<Rational>& values) {
    try {
        (void)VSequence::create(values);
    } catch (const ValidationError& e) {
        return e.witness().at(0);
    }
    return static_cast<std::size_t>(-1);
}

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(Rational::parse(t));
    return out;
}

FiniteMeasure measure(std::initializer_list<std::pair<Index, const char*>> weights) {
    FiniteMeasure out;
    for (const auto& [i, w] : weights) out.add(i, Rational::parse(w));
    return out;
}

}  // namespace

TEST_CASE("v-sequence validation points at the first bad index") {
    CHECK(witness_of(rationals({"2"})) == 0);
    CHECK(witness_of(rationals({"1", "1/2"})) == 1);
    CHECK(witness_of(rationals({"1", "1", "1"})) == 2);
    CHECK(witness_of(rationals({"1", "1", "2", "7/2"})) == 3);
    CHECK_THROWS_AS((void)VSequence::create({}), ValidationError);
    CHECK_NOTHROW((void)VSequence::create(rationals({"1", "1", "2", "4"})));
    CHECK_THROWS_AS((void)USequence::create(rationals({"1", "-1/3"})), ValidationError);
}

TEST_CASE("u and v convert both ways") {
    const VSequence doubling = v_from_u(USequence::create(rationals({"0", "0", "0", "0"})));
    CHECK(doubling.values() == rationals({"1", "1", "2", "4", "8"}));

    const USequence u = u_from_v(VSequence::create(rationals({"1", "2", "3", "6"})));
    CHECK(u.values() == rationals({"1", "0", "0"}));
    CHECK(v_from_u(u) == VSequence::create(rationals({"1", "2", "3", "6"})));

    const USequence zeros = u_with_prescribed_zeros(5, {2, 4});
    CHECK(zeros.values() == rationals({"1", "0", "1", "0", "1"}));
    CHECK_THROWS_AS((void)u_with_prescribed_zeros(3, {4}), std::out_of_range);
    CHECK_THROWS_AS((void)zeros.at(0), std::out_of_range);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const VSequence v = VSequence::create(oracle::to_rationals(oracle::random_v(rng, 9)));
        CHECK(v_from_u(u_from_v(v)) == v);
    }
}

TEST_CASE("Dunkl-Ramirez weights match the closed form") {
    for (const char* a_text : {"1/2", "1/3", "1/5", "2/7"}) {
        const oracle::Q a = oracle::parse(a_text);
        const VSequence v = dunkl_ramirez_v(oracle::to_rational(a), 10);
        const auto expected = oracle::dunkl_ramirez_v(a, 10);
        for (std::size_t n = 0; n <= 10; ++n) CHECK(oracle::same(v[n], expected[n]));

        const ConvolutionStructure k = build_dunkl_ramirez(oracle::to_rational(a), 10);
        for (Index n = 1; n <= 10; ++n) {
            CAPTURE(a_text);
            CAPTURE(n);
            CHECK(oracle::matches(*k.product(n, n), oracle::dunkl_ramirez_diagonal(a, n)));
        }
        CHECK(*k.product(3, 7) == point_mass(7));
    }
    CHECK_THROWS_AS((void)build_dunkl_ramirez(Rational(2, 3), 4), std::invalid_argument);
    CHECK_THROWS_AS((void)build_dunkl_ramirez(Rational(0), 4), std::invalid_argument);
}

TEST_CASE("max deformation agrees with the oracle on random v") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 30; ++trial) {
        const auto v = oracle::random_v(rng, 8);
        const ConvolutionStructure k = build_max_deformation(VSequence::create(oracle::to_rationals(v)), 7);
        REQUIRE(k.size() == 8);
        for (Index m = 0; m < 8; ++m) {
            for (Index n = 0; n < 8; ++n) {
                const FiniteMeasure& value = *k.product(m, n);
                if (m == n && m != 0) {
                    CHECK(oracle::matches(value, oracle::max_diagonal(v, n)));
                } else {
                    CHECK(value == point_mass(std::max(m, n)));
                }
            }
        }
    }
    CHECK_THROWS_AS((void)build_max_deformation(VSequence::create(rationals({"1", "1"})), 3), ValidationError);
}

TEST_CASE("Chebyshev structures agree with the oracle inside the window") {
    const ConvolutionStructure first = build_chebyshev(1, 12);
    const ConvolutionStructure second = build_chebyshev(2, 12);
    for (Index m = 0; m <= 12; ++m) {
        for (Index n = 0; n <= 12; ++n) {
            if (m + n > 12) {
                CHECK(first.product(m, n) == nullptr);
                CHECK(second.product(m, n) == nullptr);
                continue;
            }
            CHECK(oracle::matches(*first.product(m, n), oracle::chebyshev_first(m, n)));
            CHECK(oracle::matches(*second.product(m, n), oracle::chebyshev_second(m, n)));
        }
    }
    CHECK_THROWS_AS((void)build_chebyshev(3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)build_chebyshev(1, 0), std::invalid_argument);
}

TEST_CASE("deformation specs reject malformed diagonals") {
    const SemigroupTable z3 = build_named_example("zmax", {3, 0});
    const FiniteMeasure q1 = measure({{0, "1/2"}, {1, "1/2"}});
    CHECK_THROWS_AS(DeformationSpec(z3, {{1, q1}}), ValidationError);                       // q_2 missing
    CHECK_THROWS_AS(DeformationSpec(z3, {{1, q1}, {2, measure({{0, "1/2"}})}}), ValidationError);  // mass 1/2
    CHECK_THROWS_AS(DeformationSpec(z3, {{1, q1}, {2, measure({{1, "1"}})}}), ValidationError);    // misses e
    CHECK_THROWS_AS(DeformationSpec(z3, {{0, point_mass(0)}, {1, q1}, {2, q1}}), ValidationError);
}

TEST_CASE("max conditions accept Dunkl-Ramirez and flag perturbations") {
    const SemigroupTable z4 = build_named_example("zmax", {4, 0});
    const DeformationSpec good = spec_from_chain(z4, dunkl_ramirez_v(Rational(1, 3), 3));
    const ConditionReport ok = check_max_conditions(good);
    CHECK(ok.all_pass());
    CHECK(ok.at("finite_chain").status == ConditionStatus::pass);
    CHECK(ok.at("v_budget").ok());

    SUBCASE("budget overrun on a three element chain") {
        const SemigroupTable z3 = build_named_example("zmax", {3, 0});
        const DeformationSpec spec(z3, {{1, measure({{0, "1/4"}, {1, "3/4"}})}, {2, measure({{0, "1/2"}, {1, "1/2"}})}});
        const ConditionReport r = check_max_conditions(spec);
        CHECK(r.at("weight_budget").status == ConditionStatus::fail);
        CHECK(r.at("weight_budget").witness == std::vector<Index>{2});
        CHECK(r.at("v_budget").status == ConditionStatus::fail);
        CHECK_FALSE(verify_semiconvo(spec.structure()).associativity);
    }
    SUBCASE("product rule broken at (1, 2)") {
        std::map<Index, FiniteMeasure> q = good.q();
        q[2] = measure({{0, "1/5"}, {1, "1/3"}, {2, "7/15"}});
        const ConditionReport r = check_max_conditions(DeformationSpec(z4, q));
        CHECK(r.at("product_rule").status == ConditionStatus::fail);
        CHECK(r.at("product_rule").witness == std::vector<Index>{1, 2});
        CHECK(r.at("support_sandwich").ok());
        CHECK(r.failed() == std::vector<std::string>{"product_rule", "v_product_rule"});
    }
    SUBCASE("support sandwich broken by a gap") {
        std::map<Index, FiniteMeasure> q = good.q();
        q[2] = measure({{0, "1/2"}, {2, "1/2"}});
        const ConditionReport r = check_max_conditions(DeformationSpec(z4, q));
        CHECK(r.at("support_sandwich").status == ConditionStatus::fail);
        CHECK(r.at("support_sandwich").witness == std::vector<Index>{2, 1});
    }
    SUBCASE("support sandwich broken by charging above n") {
        std::map<Index, FiniteMeasure> q = good.q();
        q[1] = measure({{0, "1/2"}, {1, "1/4"}, {3, "1/4"}});
        const ConditionReport r = check_max_conditions(DeformationSpec(z4, q));
        CHECK(r.at("support_sandwich").witness == std::vector<Index>{1, 3});
    }
    SUBCASE("two elements make the product rule vacuous") {
        const SemigroupTable z2 = build_named_example("zmax", {2, 0});
        const ConditionReport r = check_max_conditions(DeformationSpec(z2, {{1, measure({{0, "1/3"}, {1, "2/3"}})}}));
        CHECK(r.at("product_rule").status == ConditionStatus::vacuous);
        CHECK(r.all_pass());
    }
    CHECK_THROWS_AS((void)check_max_conditions(spec_from_chain(build_named_example("maxsum", {3, 3}),
                                                                dunkl_ramirez_v(Rational(1, 3), 3))),
                    PreconditionError);
}

TEST_CASE("general conditions on the example monoids") {
    const VSequence v = dunkl_ramirez_v(Rational(1, 3), 8);

    const ConditionReport unit = check_main_conditions(spec_from_chain(build_named_example("zplus_unit", {6, 0}), v));
    CHECK(unit.at("action_free").status == ConditionStatus::fail);
    CHECK(unit.at("nonidempotent_ideal").status == ConditionStatus::fail);
    CHECK(unit.at("absorbing_products").status == ConditionStatus::fail);
    CHECK(unit.at("idempotent_chain").ok());
    CHECK(unit.at("support_sandwich").ok());

    const ConditionReport z2 = check_main_conditions(spec_from_chain(build_named_example("zmax_z2", {6, 0}), v));
    CHECK(z2.at("action_free").ok());
    CHECK(z2.failed() == std::vector<std::string>{"nonidempotent_ideal", "absorbing_products"});

    const ConditionReport maxsum = check_main_conditions(spec_from_chain(build_named_example("maxsum", {6, 6}), v));
    CHECK(maxsum.all_pass());
    CHECK(maxsum.window_limited);

    const ConditionReport chain = check_main_conditions(spec_from_chain(build_named_example("zmax", {5, 0}), v));
    CHECK(chain.at("nonidempotent_ideal").status == ConditionStatus::vacuous);
    CHECK(chain.all_pass());
    CHECK_THROWS_AS((void)chain.at("nope"), std::out_of_range);
}

TEST_CASE("general builder requires an action-free monoid") {
    const VSequence v = dunkl_ramirez_v(Rational(1, 3), 8);
    CHECK_THROWS_AS((void)build_general_deformation(build_named_example("zplus_unit", {4, 0}), v), PreconditionError);
    CHECK_THROWS_AS((void)build_general_deformation(build_named_example("zgroup", {3, 0}), v), PreconditionError);
    const ConvolutionStructure k = build_general_deformation(build_named_example("maxsum", {3, 3}), v);
    CHECK(verify_semiconvo(k).ok());
    CHECK_THROWS_AS((void)spec_from_chain(build_named_example("zmax", {6, 0}), v.prefix(3)), ValidationError);
}
