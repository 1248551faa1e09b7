//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include "ms4wb/ms4wb.hpp"

namespace {

using namespace ms4wb;

void BM_GridSubalgebra(benchmark::State &state) {
  const int m = static_cast<int>(state.range(0));
  auto f = et_grid(m);
  auto g = et_generator(m);
  for (auto _ : state) benchmark::DoNotOptimize(generated_subalgebra(f, {g}).atom_count);
}
BENCHMARK(BM_GridSubalgebra)->DenseRange(2, 8, 2);

void BM_ThreeLayerSubalgebra(benchmark::State &state) {
  auto b = builtin("three_layer", static_cast<int>(state.range(0)));
  const auto &f = std::get<Frame>(b.frame);
  for (auto _ : state)
    benchmark::DoNotOptimize(generated_subalgebra(f, {b.sets.at("g")}).atom_count);
}
BENCHMARK(BM_ThreeLayerSubalgebra)->Arg(2)->Arg(5)->Arg(10);

void BM_ValiditySweep(benchmark::State &state) {
  auto f = three_layer(1);
  auto phi = axiom("P", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(f, phi).valuations_checked);
}
BENCHMARK(BM_ValiditySweep)->Arg(1)->Arg(2);

void BM_Congruences(benchmark::State &state) {
  Rng rng(5);
  auto f = random_frame(rng, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(congruences(f).q_upsets.size());
}
BENCHMARK(BM_Congruences)->Arg(6)->Arg(10)->Arg(14);

void BM_Coloring(benchmark::State &state) {
  Rng rng(9);
  auto f = random_frame(rng, static_cast<unsigned>(state.range(0)));
  PointSet g(f.size(), 0x5);
  for (auto _ : state) benchmark::DoNotOptimize(is_generating(f, {g}).generating);
}
BENCHMARK(BM_Coloring)->Arg(4)->Arg(6)->Arg(8);

void BM_TransferPair(benchmark::State &state) {
  TransferContext ctx(snake(static_cast<int>(state.range(0))));
  const std::uint64_t mask = PointSet::mask(ctx.translated().size());
  std::uint64_t a = 1, b = 6;
  for (auto _ : state) {
    const std::uint64_t gens[2] = {a, b};
    benchmark::DoNotOptimize(ctx.k_hat_within_l(gens, 2));
    a = (a * 5 + 1) & mask;
    b = (b * 3 + 7) & mask;
  }
}
BENCHMARK(BM_TransferPair)->Arg(4)->Arg(10);

void BM_EnumerateMs4(benchmark::State &state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_ms4_frame(n, [&](const Frame &) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateMs4)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State &state) {
  Rng rng(3);
  auto text = to_string(random_formula(rng, 8, Language::kMs4));
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse(text)).size());
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
