#include <benchmark/benchmark.h>

#include <dptree/dptree.hpp>

using namespace dptree;

namespace {

// Terminal triples for the three layer counts on K_n x K_n.
TerminalSpec spec_for(const ProductDigraph& p, int layers) {
  switch (layers) {
    case 1: return TerminalSpec(p.encode(0, 0), p.encode(0, 1), p.encode(0, 2));
    case 2: return TerminalSpec(p.encode(0, 0), p.encode(0, 1), p.encode(1, 0));
    default: return TerminalSpec(p.encode(0, 0), p.encode(1, 1), p.encode(2, 2));
  }
}

void BM_Construct(benchmark::State& state) {
  const auto n = static_cast<VertexId>(state.range(0));
  Digraph k = complete_symmetric(n);
  ProductDigraph p = cartesian_product(k, k);
  TerminalSpec s = spec_for(p, static_cast<int>(state.range(1)));
  FactorCertificates certs = certificates_for(k, k, p, s, n - 3, n - 3);
  for (auto _ : state) {
    auto result = construct(k, k, p, s, certs);
    benchmark::DoNotOptimize(result.family.trees.data());
  }
  state.counters["product_vertices"] = p.graph().vertex_count();
}
BENCHMARK(BM_Construct)
    ->ArgsProduct({{5, 10, 15, 20, 30}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto n = static_cast<VertexId>(state.range(0));
  Digraph k = complete_symmetric(n);
  ProductDigraph p = cartesian_product(k, k);
  TerminalSpec s = spec_for(p, 3);
  auto result = construct(k, k, p, s, certificates_for(k, k, p, s, n - 3, n - 3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(result.family).valid);
}
BENCHMARK(BM_Verify)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Dinic(benchmark::State& state) {
  const auto n = static_cast<VertexId>(state.range(0));
  Digraph d = random_strong(n, 0.3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(max_internally_disjoint_paths(d, 0, n - 1));
}
BENCHMARK(BM_Dinic)->RangeMultiplier(2)->Range(16, 256);

void BM_TauSR(benchmark::State& state) {
  const auto n = static_cast<VertexId>(state.range(0));
  Digraph k = complete_symmetric(n);
  TerminalSpec s(0, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tau_s_r(k, s).value);
}
BENCHMARK(BM_TauSR)->DenseRange(6, 14, 4);

void BM_Tau3(benchmark::State& state) {
  const auto n = static_cast<VertexId>(state.range(0));
  Digraph d = random_strong(n, 0.8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tau3(d).value);
}
BENCHMARK(BM_Tau3)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
