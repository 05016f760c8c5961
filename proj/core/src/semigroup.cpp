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

#include "hyperconvo/semigroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperconvo/errors.hpp"

namespace hyperconvo {

namespace {

std::string pair_text(const SemigroupTable& s, Index m, Index n) {
    return "(" + s.name(m) + ", " + s.name(n) + ")";
}

bool contains_sorted(const std::vector<Index>& set, Index m) {
    return std::binary_search(set.begin(), set.end(), m);
}

}  // namespace

SemigroupTable SemigroupTable::create(std::vector<std::string> names, Index identity,
                                      std::vector<std::vector<Index>> table, std::optional<Index> sentinel) {
    const std::size_t n = names.size();
    if (n == 0) throw ValidationError("semigroup table has no elements");
    if (table.size() != n) {
        throw ValidationError("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
    }
    if (identity >= n) throw ValidationError("identity index out of range", {identity});
    if (sentinel && *sentinel >= n) throw ValidationError("sentinel index out of range", {*sentinel});
    if (sentinel && *sentinel == identity) throw ValidationError("sentinel cannot be the identity", {identity});
    {
        std::set<std::string> seen;
        for (Index i = 0; i < n; ++i) {
            if (!seen.insert(names[i]).second) throw ValidationError("duplicate element name '" + names[i] + "'", {i});
        }
    }

    SemigroupTable s;
    s.names_ = std::move(names);
    s.identity_ = identity;
    s.sentinel_ = sentinel;
    s.table_.reserve(n * n);
    for (Index m = 0; m < n; ++m) {
        if (table[m].size() != n) {
            throw ValidationError("row " + std::to_string(m) + " has " + std::to_string(table[m].size()) +
                                      " entries, expected " + std::to_string(n),
                                  {m});
        }
        for (Index k = 0; k < n; ++k) {
            if (table[m][k] >= n) throw ValidationError("product index out of range", {m, k});
            s.table_.push_back(table[m][k]);
        }
    }

    for (Index m = 0; m < n; ++m) {
        if (s.product(m, identity) != m || s.product(identity, m) != m) {
            throw ValidationError("identity law fails at " + s.names_[m], {m});
        }
    }
    if (sentinel) {
        for (Index m = 0; m < n; ++m) {
            if (s.product(*sentinel, m) != *sentinel || s.product(m, *sentinel) != *sentinel) {
                throw ValidationError("sentinel is not absorbing at " + s.names_[m], {*sentinel, m});
            }
        }
    }
    for (Index m = 0; m < n; ++m) {
        for (Index k = m + 1; k < n; ++k) {
            if (s.product(m, k) != s.product(k, m)) {
                throw ValidationError("table is not commutative at " + pair_text(s, m, k), {m, k});
            }
        }
    }
    for (Index a = 0; a < n; ++a) {
        if (s.is_sentinel(a)) continue;
        for (Index b = 0; b < n; ++b) {
            if (s.is_sentinel(b)) continue;
            const Index ab = s.product(a, b);
            for (Index c = 0; c < n; ++c) {
                if (s.is_sentinel(c)) continue;
                const Index bc = s.product(b, c);
                const Index lhs = s.product(ab, c);
                const Index rhs = s.product(a, bc);
                if (s.is_sentinel(ab) || s.is_sentinel(bc) || s.is_sentinel(lhs) || s.is_sentinel(rhs)) {
                    ++s.window_limited_triples_;
                    continue;
                }
                if (lhs != rhs) {
                    throw ValidationError("table is not associative at (" + s.names_[a] + ", " + s.names_[b] + ", " +
                                              s.names_[c] + ")",
                                          {a, b, c});
                }
            }
        }
    }
    return s;
}

std::optional<Index> SemigroupTable::find(std::string_view name) const {
    for (Index i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::vector<Index> SemigroupTable::elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i) {
        if (!is_sentinel(i)) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<Index>> SemigroupTable::rows() const {
    std::vector<std::vector<Index>> out(size(), std::vector<Index>(size()));
    for (Index m = 0; m < size(); ++m) {
        for (Index n = 0; n < size(); ++n) out[m][n] = product(m, n);
    }
    return out;
}

SemigroupTable SemigroupTable::restrict_to(const std::vector<Index>& subset) const {
    std::vector<Index> position(size(), size());
    for (Index i = 0; i < subset.size(); ++i) {
        if (subset[i] >= size() || is_sentinel(subset[i])) throw ValidationError("invalid subset element", {subset[i]});
        position[subset[i]] = i;
    }
    if (position[identity_] == size()) throw ValidationError("subset does not contain the identity", {identity_});

    const bool need_sentinel = std::any_of(subset.begin(), subset.end(), [&](Index a) {
        return std::any_of(subset.begin(), subset.end(), [&](Index b) { return is_sentinel(product(a, b)); });
    });
    std::vector<std::string> names;
    for (Index a : subset) names.push_back(names_[a]);
    const Index local_sentinel = subset.size();
    if (need_sentinel) names.push_back(sentinel_ ? names_[*sentinel_] : std::string("overflow"));

    const std::size_t n = names.size();
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n, local_sentinel));
    for (Index i = 0; i < subset.size(); ++i) {
        for (Index j = 0; j < subset.size(); ++j) {
            const Index p = product(subset[i], subset[j]);
            if (is_sentinel(p)) continue;
            if (position[p] == size()) {
                throw ValidationError("subset is not closed: " + pair_text(*this, subset[i], subset[j]),
                                      {subset[i], subset[j]});
            }
            table[i][j] = position[p];
        }
    }
    return create(std::move(names), position[identity_], std::move(table),
                  need_sentinel ? std::optional<Index>(local_sentinel) : std::nullopt);
}

Classification classify(const SemigroupTable& s) {
    Classification c;
    const std::vector<Index> elems = s.elements();
    const Index e = s.identity();

    for (Index m : elems) {
        if (s.product(m, m) == m) {
            c.idempotents.push_back(m);
            if (m != e) c.nonidentity_idempotents.push_back(m);
        } else {
            c.non_idempotents.push_back(m);
        }
    }

    for (Index g : elems) {
        for (Index h : elems) {
            if (s.product(g, h) == e) {
                c.maximal_group.push_back(g);
                break;
            }
        }
    }
    for (Index g : c.maximal_group) {
        const bool acts_trivially = std::all_of(c.nonidentity_idempotents.begin(), c.nonidentity_idempotents.end(),
                                                [&](Index m) { return s.product(g, m) == m; });
        if (acts_trivially) c.acting_units.push_back(g);
    }

    c.inverse_free = true;
    c.max_min_type = true;
    for (Index m : elems) {
        for (Index n : elems) {
            const Index p = s.product(m, n);
            if (s.is_sentinel(p)) {
                c.window_limited = true;
                continue;
            }
            if (p == e && !(m == e && n == e)) c.inverse_free = false;
            if (p != m && p != n) c.max_min_type = false;
        }
    }
    c.action_free = c.acting_units.size() == 1 && c.acting_units.front() == e;

    if (!c.non_idempotents.empty()) {
        const IdealCheck ideal = check_ideal(s, c.non_idempotents);
        c.non_idempotents_ideal = ideal.is_ideal;
        c.non_idempotents_prime_ideal = ideal.is_prime_ideal;
    }
    return c;
}

std::optional<std::size_t> element_order(const SemigroupTable& s, Index m) {
    if (m >= s.size() || s.is_sentinel(m)) throw std::invalid_argument("element_order: invalid element");
    Index power = m;
    // In a finite semigroup some power is idempotent within #S steps.
    for (std::size_t j = 1; j <= s.size() + 1; ++j) {
        if (s.is_sentinel(power)) return std::nullopt;
        if (s.product(power, power) == power) return j;
        power = s.product(power, m);
    }
    return std::nullopt;
}

std::optional<std::size_t> IdempotentChain::rank(Index m) const {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == m) return i;
    }
    return std::nullopt;
}

IdempotentChain idempotent_chain(const SemigroupTable& s) {
    IdempotentChain chain;
    std::vector<Index> idem;
    for (Index m : s.elements()) {
        if (s.product(m, m) == m) idem.push_back(m);
    }
    for (Index m : idem) {
        for (Index n : idem) {
            const Index p = s.product(m, n);
            if (p != m && p != n) {
                chain.witness = std::make_pair(m, n);
                return chain;
            }
        }
    }
    // In a max-min semilattice the number of strictly smaller elements is the rank.
    std::vector<std::pair<std::size_t, Index>> ranked;
    for (Index n : idem) {
        std::size_t below = 0;
        for (Index m : idem) {
            if (m != n && s.product(m, n) == n) ++below;
        }
        ranked.emplace_back(below, n);
    }
    std::sort(ranked.begin(), ranked.end());
    for (const auto& entry : ranked) chain.order.push_back(entry.second);
    return chain;
}

IdealCheck check_ideal(const SemigroupTable& s, const std::vector<Index>& subset) {
    if (subset.empty()) throw ValidationError("check_ideal: empty subset");
    std::vector<Index> t = subset;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (Index m : t) {
        if (m >= s.size() || s.is_sentinel(m)) throw ValidationError("check_ideal: invalid element", {m});
    }

    IdealCheck out;
    out.is_subsemigroup = true;
    for (Index a : t) {
        for (Index b : t) {
            const Index p = s.product(a, b);
            if (!s.is_sentinel(p) && !contains_sorted(t, p)) {
                out.is_subsemigroup = false;
                out.subsemigroup_witness = std::make_pair(a, b);
                break;
            }
        }
        if (!out.is_subsemigroup) break;
    }

    const std::vector<Index> elems = s.elements();
    out.is_ideal = true;
    for (Index a : t) {
        for (Index b : elems) {
            const Index p = s.product(a, b);
            if (!s.is_sentinel(p) && !contains_sorted(t, p)) {
                out.is_ideal = false;
                out.ideal_witness = std::make_pair(a, b);
                break;
            }
        }
        if (!out.is_ideal) break;
    }

    std::vector<Index> complement;
    for (Index m : elems) {
        if (!contains_sorted(t, m)) complement.push_back(m);
    }
    bool complement_closed = !complement.empty();
    for (Index a : complement) {
        for (Index b : complement) {
            const Index p = s.product(a, b);
            if (!s.is_sentinel(p) && contains_sorted(t, p)) {
                complement_closed = false;
                out.prime_witness = std::make_pair(a, b);
                break;
            }
        }
        if (!complement_closed) break;
    }
    out.is_prime_ideal = out.is_ideal && complement_closed;
    return out;
}

namespace {

SemigroupTable make_zmax(std::size_t k) {
    std::vector<std::string> names;
    std::vector<std::vector<Index>> table(k, std::vector<Index>(k));
    for (Index i = 0; i < k; ++i) {
        names.push_back(std::to_string(i));
        for (Index j = 0; j < k; ++j) table[i][j] = std::max(i, j);
    }
    return SemigroupTable::create(std::move(names), 0, std::move(table));
}

SemigroupTable make_zgroup(std::size_t k) {
    std::vector<std::string> names;
    std::vector<std::vector<Index>> table(k, std::vector<Index>(k));
    for (Index i = 0; i < k; ++i) {
        names.push_back(std::to_string(i));
        for (Index j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    }
    return SemigroupTable::create(std::move(names), 0, std::move(table));
}

std::string pair_name(std::size_t j, int alpha) {
    return "(" + std::to_string(j) + "," + std::to_string(alpha) + ")";
}

// (j,0) -> j for j = 0..w, (0,1) -> w + 1.
SemigroupTable make_zplus_unit(std::size_t w) {
    const std::size_t n = w + 2;
    const Index unit = w + 1;
    std::vector<std::string> names;
    for (std::size_t j = 0; j <= w; ++j) names.push_back(pair_name(j, 0));
    names.push_back(pair_name(0, 1));
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (a != unit && b != unit) {
                table[a][b] = std::max(a, b);
            } else if (a == unit && b == unit) {
                table[a][b] = 0;
            } else {
                const Index other = a == unit ? b : a;
                table[a][b] = other == 0 ? unit : other;
            }
        }
    }
    return SemigroupTable::create(std::move(names), 0, std::move(table));
}

// (j, alpha) -> 2j + alpha.
SemigroupTable make_zmax_z2(std::size_t w) {
    const std::size_t n = 2 * (w + 1);
    std::vector<std::string> names;
    for (std::size_t j = 0; j <= w; ++j) {
        names.push_back(pair_name(j, 0));
        names.push_back(pair_name(j, 1));
    }
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            table[a][b] = 2 * std::max(a / 2, b / 2) + ((a % 2 + b % 2) % 2);
        }
    }
    return SemigroupTable::create(std::move(names), 0, std::move(table));
}

// t_r -> r for r = 0..w, natural number k -> w + k, sentinel last.
SemigroupTable make_maxsum(std::size_t w, std::size_t additive) {
    const std::size_t t_count = w + 1;
    const std::size_t n = t_count + additive + 1;
    const Index sentinel = n - 1;
    std::vector<std::string> names;
    names.emplace_back("0");
    for (std::size_t r = 1; r <= w; ++r) names.push_back(std::to_string(r) + "/" + std::to_string(r + 1));
    for (std::size_t k = 1; k <= additive; ++k) names.push_back(std::to_string(k));
    names.emplace_back("overflow");

    std::vector<std::vector<Index>> table(n, std::vector<Index>(n, sentinel));
    for (Index a = 0; a < sentinel; ++a) {
        for (Index b = 0; b < sentinel; ++b) {
            const bool a_in_t = a < t_count;
            const bool b_in_t = b < t_count;
            if (a_in_t || b_in_t) {
                // Every element of T is below every natural number.
                table[a][b] = std::max(a, b);
            } else {
                const std::size_t sum = (a - w) + (b - w);
                table[a][b] = sum <= additive ? w + sum : sentinel;
            }
        }
    }
    return SemigroupTable::create(std::move(names), 0, std::move(table), sentinel);
}

}  // namespace

SemigroupTable build_named_example(std::string_view name, const ExampleParams& params) {
    if (params.window < 2) throw std::invalid_argument("example window must be at least 2");
    if (name == "zmax") return make_zmax(params.window);
    if (name == "zplus") return make_zmax(params.window + 1);
    if (name == "zgroup") return make_zgroup(params.window);
    if (name == "zplus_unit") return make_zplus_unit(params.window);
    if (name == "zmax_z2") return make_zmax_z2(params.window);
    if (name == "maxsum") {
        if (params.additive_window < 1) throw std::invalid_argument("maxsum needs additive_window >= 1");
        return make_maxsum(params.window, params.additive_window);
    }
    throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> named_examples() { return {"zmax", "zplus", "zgroup", "zplus_unit", "zmax_z2", "maxsum"}; }

}  // namespace hyperconvo
