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

#include <benchmark/benchmark.h>

#include "hyperconvo/axioms.hpp"
#include "hyperconvo/deformation.hpp"
#include "hyperconvo/duality.hpp"

namespace {

using hyperconvo::Rational;

void BM_BuildDunklRamirez(benchmark::State& state) {
    const auto window = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::build_dunkl_ramirez(Rational(1, 3), window));
}
BENCHMARK(BM_BuildDunklRamirez)->Arg(16)->Arg(32)->Arg(64);

void BM_VerifyHypergroup(benchmark::State& state) {
    const auto k = hyperconvo::build_dunkl_ramirez(Rational(1, 3), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::verify_hypergroup(k));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyHypergroup)->Arg(8)->Arg(16)->Arg(24)->Complexity(benchmark::oNCubed);

void BM_VerifyChebyshev(benchmark::State& state) {
    const auto k = hyperconvo::build_chebyshev(2, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::verify_hypergroup(k));
}
BENCHMARK(BM_VerifyChebyshev)->Arg(12)->Arg(24);

void BM_Haar(benchmark::State& state) {
    const auto k = hyperconvo::build_dunkl_ramirez(Rational(1, 5), 32);
    for (auto _ : state) {
        const auto lambda = hyperconvo::haar(k);
        benchmark::DoNotOptimize(hyperconvo::verify_haar_invariance(k, lambda));
    }
}
BENCHMARK(BM_Haar);

void BM_DualClosed(benchmark::State& state) {
    const auto beta = hyperconvo::beta_sequence(hyperconvo::dunkl_ramirez_v(Rational(1, 3), 96));
    const auto p = static_cast<std::size_t>(state.range(0));
    const auto m = hyperconvo::DualPoint::finite(16);
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::dual_convolution_closed(m, m, beta, p));
}
BENCHMARK(BM_DualClosed)->Arg(16)->Arg(64);

void BM_DualSolve(benchmark::State& state) {
    const auto beta = hyperconvo::beta_sequence(hyperconvo::dunkl_ramirez_v(Rational(1, 3), 96));
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::dual_convolution_solve(16, beta, p));
}
BENCHMARK(BM_DualSolve)->Arg(16)->Arg(64);

void BM_FiniteDual(benchmark::State& state) {
    const auto k = hyperconvo::build_dunkl_ramirez(Rational(1, 3), static_cast<std::size_t>(state.range(0)) - 1);
    for (auto _ : state) benchmark::DoNotOptimize(hyperconvo::finite_dual(k));
}
BENCHMARK(BM_FiniteDual)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
