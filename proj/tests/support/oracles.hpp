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

#ifndef HYPERCONVO_TESTS_ORACLES_HPP
#define HYPERCONVO_TESTS_ORACLES_HPP

// Reference values computed straight from closed forms with raw GMP
// rationals. Nothing here calls into the library, so the tests compare two
// independent computations.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hyperconvo/rational.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::map<std::size_t, Q>;

inline Q q(std::int64_t num, std::int64_t den = 1) {
    Q out(num, den);
    out.canonicalize();
    return out;
}

inline Q parse(const std::string& text) {
    Q out(text);
    out.canonicalize();
    return out;
}

inline Q power(const Q& base, unsigned exponent) {
    Q out = 1;
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

inline hyperconvo::Rational to_rational(const Q& value) { return hyperconvo::Rational(value); }
inline bool same(const hyperconvo::Rational& lhs, const Q& rhs) { return lhs.raw() == rhs; }

// Dunkl-Ramirez diagonal: q_n(0) = a^n/(1-a), q_n(k) = a^(n-k), q_n(n) = (1-2a)/(1-a).
inline Dense dunkl_ramirez_diagonal(const Q& a, std::size_t n) {
    Dense out;
    out[0] = power(a, static_cast<unsigned>(n)) / (1 - a);
    for (std::size_t k = 1; k < n; ++k) out[k] = power(a, static_cast<unsigned>(n - k));
    const Q top = (1 - 2 * a) / (1 - a);
    if (top != 0) out[n] = top;
    return out;
}

inline Q dunkl_ramirez_haar(const Q& a, std::size_t n) {
    return n == 0 ? Q(1) : Q((1 - a) / power(a, static_cast<unsigned>(n)));
}

// Max deformation from v: q_n(m) = v_m / v_n for m < n, q_n(n) = u_n / v_n.
inline Dense max_diagonal(const std::vector<Q>& v, std::size_t n) {
    Dense out;
    Q lower = 0;
    for (std::size_t m = 0; m < n; ++m) {
        out[m] = v[m] / v[n];
        lower += v[m];
    }
    const Q u = v[n] - lower;
    if (u != 0) out[n] = u / v[n];
    return out;
}

inline Dense chebyshev_first(std::size_t m, std::size_t n) {
    Dense out;
    const std::size_t d = m > n ? m - n : n - m;
    out[d] += q(1, 2);
    out[m + n] += q(1, 2);
    return out;
}

// Second kind: sum_{k=0}^{min(m,n)} (|m-n|+2k+1)/((m+1)(n+1)) δ_{|m-n|+2k}.
inline Dense chebyshev_second(std::size_t m, std::size_t n) {
    Dense out;
    const std::size_t d = m > n ? m - n : n - m;
    const auto den = static_cast<std::int64_t>((m + 1) * (n + 1));
    for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        out[d + 2 * k] += q(static_cast<std::int64_t>(d + 2 * k + 1), den);
    }
    return out;
}

// β_k = -(v_0 + ... + v_k) / v_{k+1}.
inline Q beta(const std::vector<Q>& v, std::size_t k) {
    Q sum = 0;
    for (std::size_t j = 0; j <= k; ++j) sum += v[j];
    return -sum / v[k + 1];
}

inline Q character(const std::vector<Q>& v, std::size_t k, std::size_t n) {
    if (n <= k) return 1;
    if (n == k + 1) return beta(v, k);
    return 0;
}

// Random admissible v of the given length via u_n = p/q, p in 0..100, q in 1..100.
inline std::vector<Q> random_v(std::mt19937_64& rng, std::size_t length) {
    std::uniform_int_distribution<int> num(0, 100);
    std::uniform_int_distribution<int> den(1, 100);
    std::vector<Q> v{Q(1)};
    Q sum = 1;
    while (v.size() < length) {
        const Q next = sum + q(num(rng), den(rng));
        v.push_back(next);
        sum += next;
    }
    return v;
}

inline std::vector<hyperconvo::Rational> to_rationals(const std::vector<Q>& values) {
    std::vector<hyperconvo::Rational> out;
    for (const Q& x : values) out.push_back(to_rational(x));
    return out;
}

// Dunkl-Ramirez v: v_0 = 1, v_n = (1-a)/a^n.
inline std::vector<Q> dunkl_ramirez_v(const Q& a, std::size_t window) {
    std::vector<Q> v;
    for (std::size_t n = 0; n <= window; ++n) v.push_back(dunkl_ramirez_haar(a, n));
    return v;
}

}  // namespace oracle

#endif  // HYPERCONVO_TESTS_ORACLES_HPP
