// Copyright 2026 The dvworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "dv/duality.hpp"
#include "dv/frame.hpp"
#include "dv/frame_constructions.hpp"
#include "dv/s2ic/formula.hpp"
#include "dv/s2ic/search.hpp"
#include "dv/s2ic/semantics.hpp"
#include "dv/subordination.hpp"
#include "dv/topology.hpp"

namespace {

dv::SubordinationAlgebra order(unsigned n) { return dv::SubordinationAlgebra::order(dv::FiniteBooleanAlgebra(n)); }

void BM_CheckAxioms(benchmark::State& state) {
    const auto v = order(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dv::check_axioms(v));
}
BENCHMARK(BM_CheckAxioms)->DenseRange(1, 4);

void BM_LambdaSpace(benchmark::State& state) {
    const auto v = order(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dv::lambda_space(v));
}
BENCHMARK(BM_LambdaSpace)->DenseRange(1, 4);

void BM_IsDvSpace(benchmark::State& state) {
    const auto x = dv::lambda_space(order(static_cast<unsigned>(state.range(0)))).space;
    for (auto _ : state) benchmark::DoNotOptimize(dv::is_dv_space(x).passed());
}
BENCHMARK(BM_IsDvSpace)->DenseRange(1, 3);

void BM_Representation(benchmark::State& state) {
    const auto v = order(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dv::verify_representation(v).verdict.passed());
}
BENCHMARK(BM_Representation)->DenseRange(1, 3);

void BM_VerifyXiUv(benchmark::State& state) {
    const auto l = dv::boolean_lattice(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dv::verify_xi_uv(l).passed());
}
BENCHMARK(BM_VerifyXiUv)->DenseRange(1, 3);

void BM_ChoiceFreeProduct(benchmark::State& state) {
    const std::vector<dv::FiniteSpace> family(static_cast<std::size_t>(state.range(0)), dv::discrete_space(2));
    for (auto _ : state) benchmark::DoNotOptimize(dv::choice_free_product(family).space.size());
}
BENCHMARK(BM_ChoiceFreeProduct)->DenseRange(0, 2);

void BM_ClassTables(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(dv::s2ic::class_tables(static_cast<unsigned>(state.range(0)),
                                                        dv::s2ic::ModelClass::subordination));
}
BENCHMARK(BM_ClassTables)->DenseRange(1, 3);

void BM_CountermodelSearch(benchmark::State& state) {
    const auto f = dv::s2ic::parse("(p => q) -> (p -> q)");
    const auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dv::s2ic::countermodel_search(f, 3, dv::s2ic::ModelClass::subordination, jobs));
}
BENCHMARK(BM_CountermodelSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ValidityOnDualSpace(benchmark::State& state) {
    const auto x = dv::lambda_space(order(3)).space;
    const auto f = dv::s2ic::parse("((p | q) => r) -> ((p => r) & (q => r))");
    for (auto _ : state) benchmark::DoNotOptimize(dv::s2ic::is_valid_on_space(x, f).valid);
}
BENCHMARK(BM_ValidityOnDualSpace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
