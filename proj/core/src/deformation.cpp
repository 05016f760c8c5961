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

#include "hyperconvo/deformation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hyperconvo/errors.hpp"

namespace hyperconvo {

// ---------------------------------------------------------------------------
// v / u sequences

VSequence VSequence::create(std::vector<Rational> values) {
    if (values.empty()) throw ValidationError("v-sequence is empty");
    if (values[0] != Rational(1)) {
        throw ValidationError("v_0 must be 1, got " + values[0].to_string(), {0});
    }
    Rational sum = values[0];
    for (std::size_t n = 1; n < values.size(); ++n) {
        if (values[n] < Rational(1)) {
            throw ValidationError("v_" + std::to_string(n) + " = " + values[n].to_string() + " is below 1", {n});
        }
        if (values[n] < sum) {
            throw ValidationError("v_" + std::to_string(n) + " = " + values[n].to_string() +
                                      " is below v_0 + ... + v_" + std::to_string(n - 1) + " = " + sum.to_string(),
                                  {n});
        }
        sum += values[n];
    }
    VSequence v;
    v.values_ = std::move(values);
    return v;
}

Rational VSequence::lower_sum(std::size_t n) const {
    Rational sum;
    for (std::size_t j = 0; j < n && j < values_.size(); ++j) sum += values_[j];
    return sum;
}

VSequence VSequence::prefix(std::size_t count) const {
    if (count == 0 || count > values_.size()) throw std::out_of_range("VSequence::prefix");
    VSequence v;
    v.values_.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count));
    return v;
}

USequence USequence::create(std::vector<Rational> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].sign() < 0) {
            throw ValidationError("u_" + std::to_string(i + 1) + " = " + values[i].to_string() + " is negative",
                                  {i + 1});
        }
    }
    USequence u;
    u.values_ = std::move(values);
    return u;
}

const Rational& USequence::at(std::size_t n) const {
    if (n == 0 || n > values_.size()) throw std::out_of_range("USequence index " + std::to_string(n));
    return values_[n - 1];
}

VSequence v_from_u(const USequence& u) {
    std::vector<Rational> v{Rational(1)};
    Rational sum(1);
    for (std::size_t n = 1; n <= u.size(); ++n) {
        v.push_back(sum + u.at(n));
        sum += v.back();
    }
    return VSequence::create(std::move(v));
}

USequence u_from_v(const VSequence& v) {
    std::vector<Rational> u;
    Rational sum = v[0];
    for (std::size_t n = 1; n < v.size(); ++n) {
        u.push_back(v[n] - sum);
        sum += v[n];
    }
    return USequence::create(std::move(u));
}

USequence u_with_prescribed_zeros(std::size_t length, const std::vector<std::size_t>& zero_positions) {
    std::vector<Rational> u(length, Rational(1));
    for (std::size_t n : zero_positions) {
        if (n == 0 || n > length) throw std::out_of_range("prescribed zero position " + std::to_string(n));
        u[n - 1] = Rational(0);
    }
    return USequence::create(std::move(u));
}

VSequence dunkl_ramirez_v(const Rational& a, std::size_t window) {
    if (a.sign() <= 0 || a > Rational(1, 2)) {
        throw std::invalid_argument("Dunkl-Ramirez parameter must satisfy 0 < a <= 1/2, got " + a.to_string());
    }
    std::vector<Rational> v{Rational(1)};
    const Rational one_minus_a = Rational(1) - a;
    Rational a_pow(1);
    for (std::size_t n = 1; n <= window; ++n) {
        a_pow *= a;
        v.push_back(one_minus_a / a_pow);
    }
    return VSequence::create(std::move(v));
}

// ---------------------------------------------------------------------------
// Specs and builders

DeformationSpec::DeformationSpec(SemigroupTable base, std::map<Index, FiniteMeasure> q)
    : base_(std::move(base)), q_(std::move(q)) {
    const Classification c = classify(base_);
    for (const auto& [n, qn] : q_) {
        if (!std::binary_search(c.nonidentity_idempotents.begin(), c.nonidentity_idempotents.end(), n)) {
            throw ValidationError("q given for " + (n < base_.size() ? base_.name(n) : std::to_string(n)) +
                                      ", which is not a non-identity idempotent",
                                  {n});
        }
        if (!qn.is_probability()) {
            throw ValidationError("q_" + base_.name(n) + " has mass " + qn.mass().to_string() + ", expected 1", {n});
        }
        for (Index j : qn.support()) {
            if (j >= base_.size() || base_.is_sentinel(j)) {
                throw ValidationError("q_" + base_.name(n) + " charges an element outside the window", {n, j});
            }
        }
        if (!qn.contains(base_.identity())) {
            throw ValidationError("q_" + base_.name(n) + " does not charge the identity", {n});
        }
    }
    for (Index n : c.nonidentity_idempotents) {
        if (q_.count(n) == 0) throw ValidationError("no q given for idempotent " + base_.name(n), {n});
    }
}

const FiniteMeasure& DeformationSpec::q(Index n) const {
    auto it = q_.find(n);
    if (it == q_.end()) throw std::out_of_range("no q for element " + std::to_string(n));
    return it->second;
}

ConvolutionStructure DeformationSpec::structure() const {
    ConvolutionStructure plain = ConvolutionStructure::from_semigroup(base_);
    std::vector<std::pair<Index, FiniteMeasure>> diagonal;
    for (const auto& [n, qn] : q_) {
        FiniteMeasure local;
        for (const auto& [j, w] : qn) local.add(*plain.from_base(j), w);
        diagonal.emplace_back(*plain.from_base(n), std::move(local));
    }
    return plain.with_diagonal(diagonal);
}

namespace {

// q_{c_i} on the chain from v: v_j / v_i below, u_i / v_i on the diagonal.
FiniteMeasure chain_q(const std::vector<Index>& chain, const VSequence& v, std::size_t i) {
    FiniteMeasure q;
    for (std::size_t j = 0; j < i; ++j) q.add(chain[j], v[j] / v[i]);
    q.add(chain[i], (v[i] - v.lower_sum(i)) / v[i]);
    return q;
}

}  // namespace

DeformationSpec spec_from_chain(const SemigroupTable& s, const VSequence& v) {
    const IdempotentChain chain = idempotent_chain(s);
    if (!chain.is_chain()) {
        throw PreconditionError("idempotents are not max-min type: " + s.name(chain.witness->first) + " * " +
                                s.name(chain.witness->second));
    }
    if (v.size() < chain.order.size()) {
        throw ValidationError("v has " + std::to_string(v.size()) + " entries but the idempotent chain has " +
                              std::to_string(chain.order.size()));
    }
    std::map<Index, FiniteMeasure> q;
    for (std::size_t i = 1; i < chain.order.size(); ++i) q.emplace(chain.order[i], chain_q(chain.order, v, i));
    return DeformationSpec(s, std::move(q));
}

ConvolutionStructure build_max_deformation(const VSequence& v, std::size_t window) {
    if (v.size() < window + 1) {
        throw ValidationError("v has " + std::to_string(v.size()) + " entries, window " + std::to_string(window) +
                              " needs " + std::to_string(window + 1));
    }
    const std::size_t n = window + 1;
    std::vector<std::string> names;
    ConvolutionStructure::Kernel kernel(n * n);
    std::vector<Index> chain(n);
    for (Index i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        chain[i] = i;
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (i == j && i != 0) {
                kernel[i * n + j] = chain_q(chain, v, i);
            } else {
                kernel[i * n + j] = point_mass(std::max(i, j));
            }
        }
    }
    return ConvolutionStructure(std::move(names), 0, std::move(kernel));
}

ConvolutionStructure build_dunkl_ramirez(const Rational& a, std::size_t window) {
    return build_max_deformation(dunkl_ramirez_v(a, window), window);
}

ConvolutionStructure build_general_deformation(const SemigroupTable& s, const VSequence& v_on_chain) {
    const Classification c = classify(s);
    if (!c.action_free) {
        std::string units;
        for (Index g : c.acting_units) {
            if (g != s.identity()) units += (units.empty() ? "" : ", ") + s.name(g);
        }
        throw PreconditionError("semigroup is not action-free: G_1(S) contains " + units);
    }
    return spec_from_chain(s, v_on_chain).structure();
}

ConvolutionStructure build_chebyshev(int kind, std::size_t window) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("Chebyshev kind must be 1 or 2");
    if (window < 1) throw std::invalid_argument("Chebyshev window must be at least 1");
    const std::size_t n = window + 1;
    std::vector<std::string> names;
    ConvolutionStructure::Kernel kernel(n * n);
    for (Index m = 0; m < n; ++m) {
        names.push_back(std::to_string(m));
        for (Index k = 0; k < n; ++k) {
            if (m + k > window) continue;
            const Index diff = m > k ? m - k : k - m;
            FiniteMeasure out;
            if (kind == 1) {
                out.add(diff, Rational(1, 2));
                out.add(m + k, Rational(1, 2));
            } else {
                const auto denom = static_cast<std::int64_t>((m + 1) * (k + 1));
                for (Index t = 0; t <= std::min(m, k); ++t) {
                    out.add(diff + 2 * t, Rational(static_cast<std::int64_t>(diff + 2 * t + 1), denom));
                }
            }
            kernel[m * n + k] = std::move(out);
        }
    }
    return ConvolutionStructure(std::move(names), 0, std::move(kernel));
}

// ---------------------------------------------------------------------------
// Condition reports

std::string_view to_string(ConditionStatus status) {
    switch (status) {
        case ConditionStatus::pass: return "pass";
        case ConditionStatus::fail: return "fail";
        case ConditionStatus::vacuous: return "vacuous";
    }
    return "unknown";
}

bool ConditionReport::all_pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.ok(); });
}

const ConditionResult& ConditionReport::at(std::string_view id) const {
    for (const auto& c : conditions) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("no condition '" + std::string(id) + "' in report");
}

std::vector<std::string> ConditionReport::failed() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) {
        if (!c.ok()) out.push_back(c.id);
    }
    return out;
}

namespace {

ConditionResult make_result(std::string id, std::string description) {
    ConditionResult r;
    r.id = std::move(id);
    r.description = std::move(description);
    return r;
}

void fail(ConditionResult& r, std::vector<Index> witness, std::string detail) {
    if (r.status == ConditionStatus::fail) return;  // keep the first (least) witness
    r.status = ConditionStatus::fail;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
}

// Conditions on the idempotent chain shared by the max-semigroup and the
// general checker: support sandwich, the product rule and the Haar budget,
// plus the v-form rewording when requested.
struct ChainIds {
    const char* support;
    const char* product_rule;
    const char* budget;
    const char* v_product_rule;  // nullptr to skip the v-form
    const char* v_budget;
};

void check_chain(const DeformationSpec& spec, const std::vector<Index>& chain, const ChainIds& ids,
                 ConditionReport& report) {
    const SemigroupTable& s = spec.base();
    const Index e = s.identity();
    const std::size_t len = chain.size();

    ConditionResult support = make_result(ids.support, "L_n is contained in Q_n, which is contained in L_n u {n}");
    for (std::size_t i = 1; i < len; ++i) {
        const Index n = chain[i];
        const FiniteMeasure& qn = spec.q(n);
        for (std::size_t j = 0; j < i; ++j) {
            if (!qn.contains(chain[j])) {
                fail(support, {n, chain[j]}, s.name(chain[j]) + " in L_" + s.name(n) + " is missing from Q_" + s.name(n));
                break;
            }
        }
        for (Index j : qn.support()) {
            const auto pos = std::find(chain.begin(), chain.end(), j);
            if (pos == chain.end() || static_cast<std::size_t>(pos - chain.begin()) > i) {
                fail(support, {n, j}, "Q_" + s.name(n) + " charges " + s.name(j) + ", outside L_n u {n}");
                break;
            }
        }
    }
    report.conditions.push_back(std::move(support));

    ConditionResult product = make_result(ids.product_rule, "q_n(e) = q_n(m) q_m(e) for e != m < n");
    ConditionResult budget = make_result(ids.budget, "q_n(e) (1 + sum_{e != k < n} 1/q_k(e)) <= 1");
    ConditionResult v_product = make_result(ids.v_product_rule ? ids.v_product_rule : "",
                                            "q_n(m) = v_m / v_n with v_n = 1/q_n(e), for e != m < n");
    ConditionResult v_budget = make_result(ids.v_budget ? ids.v_budget : "", "sum_{k < n} v_k <= v_n");

    if (len <= 2) {
        for (ConditionResult* r : {&product, &budget, &v_product, &v_budget}) {
            r->status = ConditionStatus::vacuous;
            r->detail = "at most two elements";
        }
    } else {
        auto qe = [&](std::size_t i) { return i == 0 ? Rational(1) : spec.q(chain[i]).weight(e); };
        // Lexicographic order on (m, n).
        for (std::size_t mi = 1; mi < len; ++mi) {
            for (std::size_t ni = mi + 1; ni < len; ++ni) {
                const Index m = chain[mi];
                const Index n = chain[ni];
                const FiniteMeasure& qn = spec.q(n);
                const Rational lhs = qn.weight(e);
                const Rational rhs = qn.weight(m) * qe(mi);
                if (lhs != rhs) {
                    fail(product, {m, n},
                         "q_" + s.name(n) + "(e) = " + lhs.to_string() + " but q_" + s.name(n) + "(" + s.name(m) +
                             ") q_" + s.name(m) + "(e) = " + rhs.to_string());
                }
                const Rational v_ratio = qe(ni) / qe(mi);  // v_m / v_n
                if (qn.weight(m) != v_ratio) {
                    fail(v_product, {m, n},
                         "q_" + s.name(n) + "(" + s.name(m) + ") = " + qn.weight(m).to_string() + " but v_m/v_n = " +
                             v_ratio.to_string());
                }
            }
        }
        for (std::size_t ni = 1; ni < len; ++ni) {
            const Index n = chain[ni];
            Rational inv_sum(1);
            for (std::size_t ki = 1; ki < ni; ++ki) inv_sum += qe(ki).reciprocal();
            const Rational value = qe(ni) * inv_sum;
            if (value > Rational(1)) {
                fail(budget, {n}, "q_" + s.name(n) + "(e) (1 + sum 1/q_k(e)) = " + value.to_string() + " > 1");
            }
            // v-form: sum_{k < n} v_k <= v_n.
            Rational v_sum;
            for (std::size_t ki = 0; ki < ni; ++ki) v_sum += qe(ki).reciprocal();
            const Rational vn = qe(ni).reciprocal();
            if (v_sum > vn) {
                fail(v_budget, {n}, "sum_{k<n} v_k = " + v_sum.to_string() + " > v_n = " + vn.to_string());
            }
        }
    }
    report.conditions.push_back(std::move(product));
    report.conditions.push_back(std::move(budget));
    if (ids.v_product_rule) report.conditions.push_back(std::move(v_product));
    if (ids.v_budget) report.conditions.push_back(std::move(v_budget));
}

std::string chain_text(const SemigroupTable& s, const std::vector<Index>& chain) {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? " < " : "") << s.name(chain[i]);
    return os.str();
}

}  // namespace

ConditionReport check_max_conditions(const DeformationSpec& spec) {
    const SemigroupTable& s = spec.base();
    const Classification c = classify(s);
    if (!c.non_idempotents.empty() || !c.max_min_type) {
        throw PreconditionError("base is not a max semigroup (E(S) != S or not max-min type); use the general checker");
    }
    const IdempotentChain chain = idempotent_chain(s);
    ConditionReport report;
    report.domain = "all " + std::to_string(chain.order.size()) + " elements of the window " +
                    chain_text(s, chain.order) + "; max products never leave the window";

    ConditionResult finite = make_result("finite_chain", "S is finite or order-isomorphic to (Z_+, max)");
    finite.detail = "finite window of " + std::to_string(chain.order.size()) + " elements";
    report.conditions.push_back(std::move(finite));

    check_chain(spec, chain.order, {"support_sandwich", "product_rule", "weight_budget", "v_product_rule", "v_budget"}, report);
    return report;
}

ConditionReport check_main_conditions(const DeformationSpec& spec) {
    const SemigroupTable& s = spec.base();
    const Classification c = classify(s);
    const Index e = s.identity();
    ConditionReport report;
    report.window_limited = c.window_limited;

    ConditionResult hypothesis = make_result("action_free", "G_1(S) = {e}");
    for (Index g : c.acting_units) {
        if (g != e) {
            fail(hypothesis, {g}, s.name(g) + " is a unit acting trivially on E_0(S)");
            break;
        }
    }
    report.conditions.push_back(std::move(hypothesis));

    const IdempotentChain chain = idempotent_chain(s);
    ConditionResult order = make_result("idempotent_chain", "E(S) is finite or order-isomorphic to (Z_+, max)");
    if (!chain.is_chain()) {
        fail(order, {chain.witness->first, chain.witness->second},
             s.name(chain.witness->first) + " * " + s.name(chain.witness->second) + " is neither factor");
    } else {
        order.detail = "finite chain " + chain_text(s, chain.order);
    }
    report.conditions.push_back(std::move(order));

    ConditionResult ideal = make_result("nonidempotent_ideal", "S \\ E(S) is an ideal");
    if (c.non_idempotents.empty()) {
        ideal.status = ConditionStatus::vacuous;
        ideal.detail = "S = E(S)";
    } else {
        const IdealCheck check = check_ideal(s, c.non_idempotents);
        if (!check.is_ideal) {
            const auto [t, u] = *check.ideal_witness;
            fail(ideal, {t, u}, s.name(t) + " * " + s.name(u) + " = " + s.name(s.product(t, u)) + " is idempotent");
        }
    }
    report.conditions.push_back(std::move(ideal));

    ConditionResult in_e = make_result("supports_in_idempotents", "Q_n is contained in E(S) for n in E_0(S)");
    for (Index n : c.nonidentity_idempotents) {
        for (Index j : spec.q(n).support()) {
            if (!std::binary_search(c.idempotents.begin(), c.idempotents.end(), j)) {
                fail(in_e, {n, j}, "Q_" + s.name(n) + " charges non-idempotent " + s.name(j));
                break;
            }
        }
    }
    report.conditions.push_back(std::move(in_e));

    ConditionResult absorb = make_result("absorbing_products", "Q_n m = {nm} for n in E_0(S), m in S \\ E(S)");
    std::size_t skipped = 0;
    for (Index n : c.nonidentity_idempotents) {
        for (Index m : c.non_idempotents) {
            const Index nm = s.product(n, m);
            if (s.is_sentinel(nm)) {
                ++skipped;
                continue;
            }
            for (Index j : spec.q(n).support()) {
                const Index jm = s.product(j, m);
                if (s.is_sentinel(jm)) {
                    ++skipped;
                    continue;
                }
                if (jm != nm) {
                    fail(absorb, {n, m, j},
                         s.name(j) + " * " + s.name(m) + " = " + s.name(jm) + " differs from " + s.name(n) + " * " +
                             s.name(m) + " = " + s.name(nm));
                }
            }
        }
    }
    if (skipped > 0) absorb.detail += (absorb.detail.empty() ? "" : "; ") + std::to_string(skipped) + " products left the window";
    report.conditions.push_back(std::move(absorb));

    if (chain.is_chain()) {
        check_chain(spec, chain.order, {"support_sandwich", "product_rule", "weight_budget", nullptr, nullptr}, report);
    } else {
        for (const char* id : {"support_sandwich", "product_rule", "weight_budget"}) {
            ConditionResult r = make_result(id, "requires the order on E(S)");
            fail(r, {chain.witness->first, chain.witness->second}, "E(S) is not a chain");
            report.conditions.push_back(std::move(r));
        }
    }

    std::ostringstream domain;
    domain << s.elements().size() << " window elements, E(S) of size " << c.idempotents.size();
    if (c.window_limited) domain << "; products leaving the window are excluded";
    report.domain = domain.str();
    return report;
}

}  // namespace hyperconvo
