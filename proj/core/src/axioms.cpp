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

#include "hyperconvo/axioms.hpp"

#include <algorithm>
#include <sstream>

#include "hyperconvo/errors.hpp"
#include "hyperconvo/semigroup.hpp"

namespace hyperconvo {

namespace {

// mu * δ_k (mu on the left) or δ_k * mu; nullopt if a needed product is
// outside the window.
std::optional<FiniteMeasure> convolve_point(const ConvolutionStructure& s, const FiniteMeasure& mu, Index k,
                                            bool mu_left) {
    FiniteMeasure out;
    for (const auto& [j, w] : mu) {
        const FiniteMeasure* value = mu_left ? s.product(j, k) : s.product(k, j);
        if (value == nullptr) return std::nullopt;
        for (const auto& [t, x] : *value) out.add(t, w * x);
    }
    return out;
}

void check_semiconvo(const ConvolutionStructure& s, VerificationReport& r) {
    const std::size_t n = s.size();
    const Index e = s.identity();
    r.elements = n;

    for (Index a = 0; a < n && r.probability; ++a) {
        for (Index b = 0; b < n; ++b) {
            const FiniteMeasure* v = s.product(a, b);
            if (v != nullptr && !v->is_probability()) {
                r.probability = false;
                r.probability_witness = std::make_pair(a, b);
                break;
            }
        }
    }

    const FiniteMeasure delta_e = point_mass(e);
    for (Index a = 0; a < n; ++a) {
        const FiniteMeasure delta_a = point_mass(a);
        const FiniteMeasure* left = s.product(e, a);
        const FiniteMeasure* right = s.product(a, e);
        if (left == nullptr || right == nullptr || *left != delta_a || *right != delta_a) {
            r.identity = false;
            r.identity_witness = a;
            break;
        }
    }

    for (Index a = 0; a < n && r.commutative; ++a) {
        for (Index b = a + 1; b < n; ++b) {
            const FiniteMeasure* ab = s.product(a, b);
            const FiniteMeasure* ba = s.product(b, a);
            const bool same = (ab == nullptr && ba == nullptr) || (ab && ba && *ab == *ba);
            if (!same) {
                r.commutative = false;
                r.commutativity_witness = std::make_pair(a, b);
                break;
            }
        }
    }

    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const FiniteMeasure* ab = s.product(a, b);
            for (Index c = 0; c < n; ++c) {
                const FiniteMeasure* bc = s.product(b, c);
                if (ab == nullptr || bc == nullptr) {
                    ++r.triples_skipped;
                    continue;
                }
                auto lhs = convolve_point(s, *ab, c, true);
                auto rhs = lhs ? convolve_point(s, *bc, a, false) : std::nullopt;
                if (!lhs || !rhs) {
                    ++r.triples_skipped;
                    continue;
                }
                ++r.triples_checked;
                if (r.associativity && *lhs != *rhs) {
                    r.associativity = false;
                    r.counterexample = AssociativityCounterexample{a, b, c, std::move(*lhs), std::move(*rhs)};
                }
            }
        }
    }
}

void check_involution(const ConvolutionStructure& s, VerificationReport& r) {
    const std::size_t n = s.size();
    const Index e = s.identity();
    r.hypergroup_checked = true;
    r.hermitian = s.is_hermitian();
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const FiniteMeasure* ab = s.product(a, b);
            const FiniteMeasure* swapped = s.product(s.involution(b), s.involution(a));
            const FiniteMeasure* support_product = s.product(a, s.involution(b));
            if (ab == nullptr || swapped == nullptr || support_product == nullptr) {
                ++r.pairs_skipped;
                continue;
            }
            ++r.pairs_checked;
            if (r.involution_adjoint) {
                FiniteMeasure image;
                for (const auto& [t, w] : *ab) image.add(s.involution(t), w);
                if (image != *swapped) {
                    r.involution_adjoint = false;
                    r.adjoint_witness = std::make_pair(a, b);
                }
            }
            if (r.support_axiom && support_product->contains(e) != (a == b)) {
                r.support_axiom = false;
                r.support_witness = std::make_pair(a, b);
            }
        }
    }
}

}  // namespace

std::string VerificationReport::domain() const {
    std::ostringstream os;
    os << elements << " elements; " << triples_checked << " triples verified exactly";
    if (triples_skipped > 0) os << ", " << triples_skipped << " triples left the window";
    if (hypergroup_checked) {
        os << "; " << pairs_checked << " pairs verified";
        if (pairs_skipped > 0) os << ", " << pairs_skipped << " pairs left the window";
    }
    return os.str();
}

VerificationReport verify_semiconvo(const ConvolutionStructure& k) {
    VerificationReport r;
    check_semiconvo(k, r);
    return r;
}

VerificationReport verify_semiconvo(const ConvolutionStructure& k, Index window) {
    return verify_semiconvo(k.truncate(window));
}

VerificationReport verify_hypergroup(const ConvolutionStructure& k) {
    VerificationReport r;
    check_semiconvo(k, r);
    check_involution(k, r);
    return r;
}

VerificationReport verify_hypergroup(const ConvolutionStructure& k, Index window) {
    return verify_hypergroup(k.truncate(window));
}

const Rational& HaarVector::at(Index n) const {
    if (!defined(n)) throw std::out_of_range("Haar weight undefined at " + std::to_string(n));
    return *weights_[n];
}

std::size_t HaarVector::defined_prefix() const {
    std::size_t count = 0;
    while (count < weights_.size() && weights_[count]) ++count;
    return count == 0 ? 0 : count - 1;
}

HaarVector haar(const ConvolutionStructure& k) {
    if (!k.is_hermitian()) throw PreconditionError("Haar weights by 1/(δ_n*δ_n)(e) need a hermitian structure");
    const Index e = k.identity();
    std::vector<std::optional<Rational>> weights(k.size());
    for (Index n = 0; n < k.size(); ++n) {
        if (n == e) {
            weights[n] = Rational(1);
            continue;
        }
        const FiniteMeasure* diag = k.product(n, n);
        if (diag == nullptr) continue;
        const Rational at_e = diag->weight(e);
        if (at_e.is_zero()) {
            throw PreconditionError("identity not in spt(δ_" + k.name(n) + " * δ_" + k.name(n) +
                                    "): not a hermitian hypergroup");
        }
        weights[n] = at_e.reciprocal();
    }
    return HaarVector(std::move(weights));
}

HaarInvarianceReport verify_haar_invariance(const ConvolutionStructure& k, const HaarVector& lambda) {
    HaarInvarianceReport r;
    const std::size_t size = k.size();
    for (Index n = 0; n < size; ++n) {
        for (Index t = 0; t < size; ++t) {
            if (!lambda.defined(t)) {
                ++r.pairs_skipped;
                continue;
            }
            bool complete = n + t < size;
            Rational total;
            for (Index m = 0; m < size; ++m) {
                const FiniteMeasure* value = k.product(m, n);
                if (value == nullptr) {
                    if (m <= n + t) complete = false;
                    continue;
                }
                const Rational w = value->weight(t);
                if (w.is_zero()) continue;
                if (!lambda.defined(m)) {
                    complete = false;
                    break;
                }
                total += lambda.at(m) * w;
            }
            if (!complete) {
                ++r.pairs_skipped;
                continue;
            }
            ++r.pairs_checked;
            if (r.ok && total != lambda.at(t)) {
                r.ok = false;
                r.witness = std::make_pair(n, t);
                r.lhs = total;
            }
        }
    }
    return r;
}

bool EquivalenceReport::agreement() const {
    const auto v = values();
    return std::all_of(v.begin(), v.end(), [&](bool b) { return b == v.front(); });
}

bool EquivalenceReport::all_true() const {
    const auto v = values();
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

std::vector<bool> EquivalenceReport::values() const {
    return {supports_in_idempotents, idempotents_max_min, inverse_free, action_free, no_fixed_products};
}

EquivalenceReport check_equivalence_conditions(const DeformationSpec& spec) {
    const SemigroupTable& s = spec.base();
    const Classification c = classify(s);
    EquivalenceReport r;

    r.supports_in_idempotents = true;
    for (Index n : c.nonidentity_idempotents) {
        for (Index j : spec.q(n).support()) {
            if (!std::binary_search(c.idempotents.begin(), c.idempotents.end(), j)) {
                r.supports_in_idempotents = false;
                r.witnesses.push_back("supports_in_idempotents: Q_" + s.name(n) + " charges " + s.name(j));
                break;
            }
        }
        if (!r.supports_in_idempotents) break;
    }

    const IdempotentChain chain = idempotent_chain(s);
    r.idempotents_max_min = chain.is_chain();
    if (!r.idempotents_max_min) {
        r.witnesses.push_back("idempotents_max_min: " + s.name(chain.witness->first) + " * " + s.name(chain.witness->second) +
                              " is neither factor");
    }

    r.inverse_free = c.inverse_free;
    if (!r.inverse_free) {
        const auto find_inverse_pair = [&]() -> std::optional<std::pair<Index, Index>> {
            for (Index m : s.elements()) {
                for (Index n : s.elements()) {
                    if (s.product(m, n) == s.identity() && m != s.identity()) return std::make_pair(m, n);
                }
            }
            return std::nullopt;
        };
        if (const auto pair = find_inverse_pair()) {
            r.witnesses.push_back("inverse_free: " + s.name(pair->first) + " * " + s.name(pair->second) + " = e");
        }
    }

    r.action_free = c.action_free;
    if (!r.action_free) {
        for (Index g : c.acting_units) {
            if (g != s.identity()) {
                r.witnesses.push_back("action_free: " + s.name(g) + " lies in G_1(S)");
                break;
            }
        }
    }

    r.no_fixed_products = true;
    for (Index n : c.nonidentity_idempotents) {
        for (Index m : c.non_idempotents) {
            if (s.product(n, m) == n) {
                r.no_fixed_products = false;
                r.witnesses.push_back("no_fixed_products: " + s.name(n) + " * " + s.name(m) + " = " + s.name(n));
                break;
            }
        }
        if (!r.no_fixed_products) break;
    }
    return r;
}

ConvolutionStructure extract_idempotent_hypergroup(const ConvolutionStructure& k) {
    const SemigroupTable* base = k.base();
    if (base == nullptr) throw PreconditionError("structure has no underlying semigroup");
    const Classification c = classify(*base);
    std::vector<Index> subset;
    for (Index m : c.idempotents) {
        const auto local = k.from_base(m);
        if (!local) throw PreconditionError("idempotent " + base->name(m) + " is outside the structure");
        subset.push_back(*local);
    }
    std::vector<bool> in_subset(k.size(), false);
    for (Index m : subset) in_subset[m] = true;
    for (Index a : subset) {
        for (Index b : subset) {
            const FiniteMeasure* value = k.product(a, b);
            if (value == nullptr) continue;
            for (Index t : value->support()) {
                if (!in_subset[t]) {
                    throw PreconditionError("δ_" + k.name(a) + " * δ_" + k.name(b) + " charges non-idempotent " +
                                            k.name(t));
                }
            }
        }
    }
    return k.restrict_to(subset);
}

}  // namespace hyperconvo
