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

#include <algorithm>

#include "hyperconvo/errors.hpp"
#include "hyperconvo/semigroup.hpp"

using namespace hyperconvo;

namespace {

std::vector<Index> by_name(const SemigroupTable& s, std::initializer_list<const char*> names) {
    std::vector<Index> out;
    for (const char* n : names) out.push_back(*s.find(n));
    std::sort(out.begin(), out.end());
    return out;
}

SemigroupTable max_table(std::size_t k) { return build_named_example("zmax", {k, 0}); }

}  // namespace

TEST_CASE("table validation names a witness") {
    SUBCASE("non-commutative") {
        try {
            (void)SemigroupTable::create({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
            FAIL("expected rejection");
        } catch (const ValidationError& e) {
            CHECK(e.witness() == std::vector<std::size_t>{1, 2});
        }
    }
    SUBCASE("non-associative") {
        // Commutative with identity, but (a a) b = e b = b while a (a b) = a a = e.
        try {
            (void)SemigroupTable::create({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 0, 1}, {2, 1, 2}});
            FAIL("expected rejection");
        } catch (const ValidationError& e) {
            CHECK(e.witness().size() == 3);
        }
    }
    SUBCASE("identity law") {
        CHECK_THROWS_AS((void)SemigroupTable::create({"e", "a"}, 0, {{0, 0}, {1, 1}}), ValidationError);
    }
    SUBCASE("ragged rows") {
        CHECK_THROWS_AS((void)SemigroupTable::create({"e", "a"}, 0, {{0, 1}, {1}}), ValidationError);
    }
    SUBCASE("non-absorbing sentinel") {
        CHECK_THROWS_AS((void)SemigroupTable::create({"e", "a", "x"}, 0, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, 2),
                        ValidationError);
    }
}

TEST_CASE("max chains are inverse-free max-min monoids") {
    const SemigroupTable s = max_table(5);
    const Classification c = classify(s);
    CHECK(c.idempotents.size() == 5);
    CHECK(c.nonidentity_idempotents.size() == 4);
    CHECK(c.non_idempotents.empty());
    CHECK(c.maximal_group == std::vector<Index>{0});
    CHECK(c.inverse_free);
    CHECK(c.action_free);
    CHECK(c.max_min_type);
    CHECK_FALSE(c.non_idempotents_ideal);
    CHECK(element_order(s, 3) == std::optional<std::size_t>(1));

    const IdempotentChain chain = idempotent_chain(max_table(4));
    CHECK(chain.is_chain());
    CHECK(chain.order == std::vector<Index>{0, 1, 2, 3});
    CHECK(chain.rank(2) == std::optional<std::size_t>(2));

    const IdealCheck top = check_ideal(max_table(3), {2});
    CHECK(top.is_ideal);
    CHECK(top.is_prime_ideal);
    CHECK_THROWS_AS((void)check_ideal(s, {}), ValidationError);
}

TEST_CASE("cyclic groups have every unit acting") {
    const SemigroupTable s = build_named_example("zgroup", {4, 0});
    const Classification c = classify(s);
    CHECK(c.idempotents == std::vector<Index>{0});
    CHECK(c.maximal_group.size() == 4);
    CHECK_FALSE(c.inverse_free);
    CHECK_FALSE(c.max_min_type);
    const IdempotentChain chain = idempotent_chain(build_named_example("zgroup", {2, 0}));
    CHECK(chain.is_chain());
    CHECK(chain.order.size() == 1);
}

TEST_CASE("adjoined unit acts trivially on the idempotents") {
    const SemigroupTable s = build_named_example("zplus_unit", {8, 0});
    const Classification c = classify(s);
    CHECK(c.maximal_group == by_name(s, {"(0,0)", "(0,1)"}));
    CHECK(c.acting_units == by_name(s, {"(0,0)", "(0,1)"}));
    CHECK_FALSE(c.action_free);
    CHECK_FALSE(c.inverse_free);
    CHECK(c.non_idempotents == by_name(s, {"(0,1)"}));
}

TEST_CASE("max chain times Z_2") {
    const SemigroupTable s = build_named_example("zmax_z2", {3, 0});
    CHECK(s.size() == 8);
    // (j, α)(j', α') = (max, α + α' mod 2).
    CHECK(s.name(s.product(*s.find("(1,1)"), *s.find("(3,1)"))) == "(3,0)");
    CHECK(s.name(s.product(*s.find("(2,0)"), *s.find("(1,1)"))) == "(2,1)");

    const Classification c = classify(s);
    CHECK(c.acting_units == std::vector<Index>{0});
    CHECK(c.action_free);
    CHECK_FALSE(c.inverse_free);
    CHECK(element_order(s, *s.find("(0,1)")) == std::optional<std::size_t>(2));

    const IdealCheck tilde = check_ideal(s, c.non_idempotents);
    CHECK_FALSE(tilde.is_subsemigroup);
    REQUIRE(tilde.subsemigroup_witness.has_value());
    CHECK(s.name(tilde.subsemigroup_witness->first) == "(0,1)");
    CHECK(s.name(tilde.subsemigroup_witness->second) == "(0,1)");
}

TEST_CASE("max-sum monoid with a sentinel") {
    const SemigroupTable s = build_named_example("maxsum", {4, 6});
    REQUIRE(s.sentinel().has_value());
    CHECK(s.elements().size() == 5 + 6);
    const Index one = *s.find("1");
    const Index two = *s.find("2");
    const Index half = *s.find("1/2");
    CHECK(s.product(one, two) == *s.find("3"));
    CHECK(s.product(half, two) == two);
    CHECK(s.product(half, *s.find("3/4")) == *s.find("3/4"));
    CHECK(s.is_sentinel(s.product(*s.find("4"), *s.find("5"))));
    CHECK_FALSE(element_order(s, one).has_value());

    const Classification c = classify(s);
    CHECK(c.idempotents.size() == 5);
    CHECK(c.action_free);
    CHECK(c.inverse_free);
    CHECK(c.non_idempotents_ideal);
    CHECK(c.non_idempotents_prime_ideal);
    CHECK(c.window_limited);

    const IdempotentChain chain = idempotent_chain(s);
    CHECK(chain.is_chain());
    CHECK(chain.order == by_name(s, {"0", "1/2", "2/3", "3/4", "4/5"}));
    CHECK(check_ideal(s, c.non_idempotents).is_prime_ideal);
}

TEST_CASE("structural implications hold on every named example") {
    for (const std::string& name : named_examples()) {
        const SemigroupTable s = build_named_example(name, {5, 4});
        const Classification c = classify(s);
        CAPTURE(name);
        CHECK(std::binary_search(c.idempotents.begin(), c.idempotents.end(), s.identity()));
        for (Index g : c.maximal_group) {
            CHECK((g == s.identity() ||
                   !std::binary_search(c.idempotents.begin(), c.idempotents.end(), g)));
        }
        if (c.max_min_type) CHECK(c.inverse_free);
        CHECK(c.inverse_free == (c.maximal_group.size() == 1));
        CHECK(c.non_idempotents_ideal == c.non_idempotents_prime_ideal);
    }
}

TEST_CASE("named examples reject bad parameters") {
    CHECK_THROWS_AS((void)build_named_example("nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)build_named_example("zmax", {1, 0}), std::invalid_argument);
}

TEST_CASE("restriction keeps the chain") {
    const SemigroupTable s = build_named_example("maxsum", {3, 4});
    const Classification c = classify(s);
    const SemigroupTable t = s.restrict_to(c.idempotents);
    CHECK(t.elements().size() == 4);
    CHECK(classify(t).max_min_type);
}
