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

#include "hyperconvo/duality.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hyperconvo/errors.hpp"
#include "linear.hpp"

namespace hyperconvo {

DualPoint DualPoint::parse(const std::string& text) {
    if (text == "inf" || text == "∞") return infinity();
    Index value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("dual point must be a non-negative integer or \"inf\": " + text);
    }
    return finite(value);
}

Index DualPoint::index() const {
    if (!index_) throw std::logic_error("the point at infinity has no index");
    return *index_;
}

std::string DualPoint::to_string() const { return index_ ? std::to_string(*index_) : "inf"; }

bool operator<(const DualPoint& lhs, const DualPoint& rhs) {
    if (lhs.is_infinite()) return false;
    if (rhs.is_infinite()) return true;
    return lhs.index() < rhs.index();
}

DualPoint min(const DualPoint& a, const DualPoint& b) { return b < a ? b : a; }

BetaSequence BetaSequence::create(std::vector<Rational> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < Rational(-1) || values[k].sign() >= 0) {
            throw ValidationError("beta_" + std::to_string(k) + " = " + values[k].to_string() +
                                      " is outside [-1, 0)",
                                  {k});
        }
    }
    BetaSequence out;
    out.values_ = std::move(values);
    return out;
}

const Rational& BetaSequence::operator[](std::size_t k) const {
    if (k >= values_.size()) {
        throw TruncationError("beta_" + std::to_string(k) + " is past the end of a sequence of length " +
                                  std::to_string(values_.size()),
                              k);
    }
    return values_[k];
}

BetaSequence beta_sequence(const VSequence& v) {
    std::vector<Rational> beta;
    Rational prefix;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        prefix += v[k];
        beta.push_back(-(prefix / v[k + 1]));
    }
    return BetaSequence::create(std::move(beta));
}

Rational character_value(const BetaSequence& beta, const DualPoint& k, Index n) {
    if (k.is_infinite() || n <= k.index()) return Rational(1);
    if (n == k.index() + 1) return beta[k.index()];
    return Rational(0);
}

CharacterTable::CharacterTable(const BetaSequence& beta, std::size_t n) : points_(n + 1) {
    if (beta.size() < n) {
        throw TruncationError("character table with " + std::to_string(n) + " finite rows needs beta_0..beta_" +
                                  std::to_string(n - 1),
                              n - 1);
    }
    for (Index k = 0; k <= n; ++k) {
        labels_.push_back(k < n ? DualPoint::finite(k) : DualPoint::infinity());
        std::vector<Rational> row;
        row.reserve(points_);
        for (Index t = 0; t < points_; ++t) row.push_back(character_value(beta, labels_.back(), t));
        rows_.push_back(std::move(row));
    }
}

CharacterTable character_table(const VSequence& v, std::size_t n) {
    if (v.size() < n + 1) {
        throw TruncationError("character table on 0.." + std::to_string(n) + " needs v_0..v_" + std::to_string(n), n);
    }
    return CharacterTable(beta_sequence(v.prefix(n + 1)), n);
}

CharacterCheck verify_character(const std::vector<Rational>& chi, const ConvolutionStructure& k) {
    CharacterCheck r;
    const std::size_t size = std::min(chi.size(), k.size());
    for (Index m = 0; m < size; ++m) {
        for (Index n = 0; n < size; ++n) {
            const FiniteMeasure* value = k.product(m, n);
            if (value == nullptr || (!value->empty() && value->max_index() >= chi.size())) {
                ++r.pairs_skipped;
                continue;
            }
            ++r.pairs_checked;
            Rational lhs;
            for (const auto& [t, w] : *value) lhs += w * chi[t];
            const Rational rhs = chi[m] * chi[n];
            if (r.ok && lhs != rhs) {
                r.ok = false;
                r.witness = std::make_pair(m, n);
                r.lhs = lhs;
                r.rhs = rhs;
            }
        }
    }
    return r;
}

namespace {

void require_max_deformation(const ConvolutionStructure& k, std::size_t limit, const char* what) {
    if (k.size() > limit) {
        throw PreconditionError(std::string(what) + " is limited to " + std::to_string(limit) + " points, got " +
                                std::to_string(k.size()));
    }
    if (k.identity() != 0 || !k.is_hermitian()) {
        throw PreconditionError(std::string(what) + " needs a hermitian structure on 0..k-1 with identity 0");
    }
    if (k.undefined_products() != 0) {
        throw PreconditionError(std::string(what) + " needs every product to be defined");
    }
}

std::size_t leading_ones(const std::vector<Rational>& chi) {
    std::size_t s = 0;
    while (s < chi.size() && chi[s] == Rational(1)) ++s;
    return s;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_characters_bruteforce(const ConvolutionStructure& k) {
    require_max_deformation(k, 12, "character enumeration");
    const std::size_t size = k.size();
    std::vector<std::vector<Rational>> candidates;
    candidates.emplace_back(size, Rational(1));
    for (Index s = 1; s < size; ++s) {
        // χ(s)^2 = χ(q_s) = (1 - q) + q χ(s) with q = q_s(s).
        const Rational q = k.product(s, s)->weight(s);
        const Rational disc = q * q + Rational(4) * (Rational(1) - q);
        Rational root;
        if (!exact_sqrt(disc, root)) continue;
        for (const Rational& value : {(q + root) / Rational(2), (q - root) / Rational(2)}) {
            if (value == Rational(1)) continue;
            std::vector<Rational> chi(size, Rational(0));
            for (Index t = 0; t < s; ++t) chi[t] = Rational(1);
            chi[s] = value;
            candidates.push_back(std::move(chi));
        }
    }

    std::vector<std::vector<Rational>> found;
    for (auto& chi : candidates) {
        if (!verify_character(chi, k).ok) continue;
        if (std::find(found.begin(), found.end(), chi) == found.end()) found.push_back(std::move(chi));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return leading_ones(a) < leading_ones(b); });
    return found;
}

Rational DualMeasure::total() const { return gamma.mass() + at_infinity + tail_mass; }

DualMeasure dual_convolution_closed(const DualPoint& m, const DualPoint& n, const BetaSequence& beta, std::size_t p) {
    DualMeasure out;
    out.m = m;
    out.n = n;
    if (m != n || m.is_infinite()) {
        const DualPoint low = min(m, n);
        if (!low.is_infinite()) (void)beta[low.index()];
        if (low.is_infinite()) {
            out.at_infinity = Rational(1);
        } else {
            out.gamma = point_mass(low.index());
        }
        return out;
    }

    const Index base = m.index();
    (void)beta[base + p];
    Rational gamma = Rational(1) + beta[base];
    out.diagonal_charged = gamma.sign() > 0;
    out.gamma.add(base, gamma);
    gamma = Rational(1);
    for (std::size_t step = 1; step <= p; ++step) {
        const Index j = base + step - 1;
        gamma *= -beta[j] / (Rational(1) - beta[j + 1]);
        out.gamma.add(base + step, gamma);
    }
    out.last_retained = base + p;
    out.tail_mass = -(out.gamma.weight(base + p) * beta[base + p]);
    return out;
}

DualMeasure dual_convolution_solve(Index m, const BetaSequence& beta, std::size_t p) {
    const std::size_t last = m + p;
    (void)beta[last];
    const std::size_t rows = last + 1;

    // Row t-1 evaluates 1 - χ_m(t)^2 = sum_j γ_j (1 - χ_j(t)) at t = 1..last+1.
    detail::Matrix lower(rows, std::vector<Rational>(rows));
    std::vector<Rational> rhs(rows);
    for (std::size_t t = 1; t <= rows; ++t) {
        for (std::size_t j = 0; j + 1 < t; ++j) lower[t - 1][j] = Rational(1);
        lower[t - 1][t - 1] = Rational(1) - beta[t - 1];
        const Rational chi = character_value(beta, DualPoint::finite(m), t);
        rhs[t - 1] = Rational(1) - chi * chi;
    }
    const std::vector<Rational> gamma = detail::forward_substitute(lower, rhs);

    DualMeasure out;
    out.m = DualPoint::finite(m);
    out.n = DualPoint::finite(m);
    for (Index j = 0; j < rows; ++j) out.gamma.add(j, gamma[j]);
    out.diagonal_charged = out.gamma.contains(m);
    out.last_retained = last;
    out.tail_mass = Rational(1) - out.gamma.mass();
    return out;
}

TransportCheck verify_dual_transport(const DualMeasure& mu, const BetaSequence& beta, std::size_t max_point) {
    TransportCheck r;
    std::size_t bound = max_point;
    if (mu.last_retained) bound = std::min(bound, *mu.last_retained + 1);
    for (Index t = 0; t <= bound; ++t) {
        const Rational lhs = character_value(beta, mu.m, t) * character_value(beta, mu.n, t);
        Rational rhs = mu.at_infinity + mu.tail_mass;
        for (const auto& [j, w] : mu.gamma) rhs += w * character_value(beta, DualPoint::finite(j), t);
        ++r.points_checked;
        if (r.ok && lhs != rhs) {
            r.ok = false;
            r.witness = t;
        }
    }
    std::ostringstream os;
    os << "points t = 0.." << bound;
    if (mu.last_retained) os << " (omitted characters equal 1 up to t = " << *mu.last_retained + 1 << ")";
    r.domain = os.str();
    return r;
}

DoubleDualTable double_dual_table(const BetaSequence& beta, std::size_t n) {
    if (n > 0 && beta.size() < n) {
        throw TruncationError("double dual up to xi_" + std::to_string(n) + " needs beta_" + std::to_string(n - 1),
                              n - 1);
    }
    DoubleDualTable out;
    for (Index k = 0; k < n; ++k) out.columns.push_back(DualPoint::finite(k));
    out.columns.push_back(DualPoint::infinity());
    for (Index row = 0; row <= n; ++row) {
        std::vector<Rational> xi;
        for (const DualPoint& k : out.columns) {
            if (row == 0 || k.is_infinite() || k.index() >= row) {
                xi.emplace_back(1);
            } else if (k.index() + 1 == row) {
                xi.push_back(beta[row - 1]);
            } else {
                xi.emplace_back(0);
            }
        }
        out.rows.push_back(std::move(xi));
    }
    return out;
}

FiniteDual finite_dual(const ConvolutionStructure& k) {
    require_max_deformation(k, 16, "finite dual");
    const std::size_t size = k.size();
    std::vector<std::vector<Rational>> characters;
    for (Index s = 1; s < size; ++s) {
        std::vector<Rational> chi(size, Rational(0));
        for (Index t = 0; t < s; ++t) chi[t] = Rational(1);
        chi[s] = k.product(s, s)->weight(s) - Rational(1);
        characters.push_back(std::move(chi));
    }
    characters.emplace_back(size, Rational(1));

    // Column l of `basis` is character l, so basis * γ is the expansion.
    detail::Matrix basis(size, std::vector<Rational>(size));
    for (Index l = 0; l < size; ++l) {
        for (Index t = 0; t < size; ++t) basis[t][l] = characters[l][t];
    }
    const auto inverse = detail::invert(basis);
    if (!inverse) throw PreconditionError("characters are linearly dependent; the structure is not a deformation");

    ConvolutionStructure::Kernel kernel(size * size);
    std::vector<std::string> names;
    for (Index a = 0; a < size; ++a) {
        names.push_back(a + 1 < size ? "chi_" + std::to_string(a) : "chi_inf");
        for (Index b = 0; b < size; ++b) {
            std::vector<Rational> product(size);
            for (Index t = 0; t < size; ++t) product[t] = characters[a][t] * characters[b][t];
            const std::vector<Rational> gamma = detail::multiply(*inverse, product);
            FiniteMeasure mu;
            for (Index l = 0; l < size; ++l) {
                if (gamma[l].sign() < 0) {
                    throw PreconditionError("chi_" + std::to_string(a) + " chi_" + std::to_string(b) +
                                            " has negative coefficient " + gamma[l].to_string() + " on " +
                                            std::to_string(l));
                }
                mu.add(l, gamma[l]);
            }
            kernel[a * size + b] = std::move(mu);
        }
    }
    return FiniteDual{std::move(characters), ConvolutionStructure(std::move(names), size - 1, std::move(kernel))};
}

}  // namespace hyperconvo
