#include <benchmark/benchmark.h>

#include "ksbound/bounds.hpp"

using namespace ksb;

static void BM_yo13_cliques(benchmark::State& state) {
  ExclusivityGraph g = builtin_graph("yo13");
  for (auto _ : state) {
    auto cliques = maximal_cliques(g);
    benchmark::DoNotOptimize(cliques);
  }
}
BENCHMARK(BM_yo13_cliques);

static void BM_yo13_vertex_enumeration(benchmark::State& state) {
  ExclusivityGraph g = builtin_graph("yo13");
  HRepPolytope p = build_polytope(g, maximal_cliques(g), 3);
  for (auto _ : state) {
    auto verts = enumerate_vertices(p);
    benchmark::DoNotOptimize(verts);
  }
}
BENCHMARK(BM_yo13_vertex_enumeration);

static void BM_cycle_extended_enumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ExclusivityGraph g = builtin_graph("cycle-extended(" + std::to_string(n) + ")");
  HRepPolytope p = build_polytope(g, maximal_cliques(g), 3);
  for (auto _ : state) {
    auto verts = enumerate_vertices(p);
    benchmark::DoNotOptimize(verts);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_cycle_extended_enumeration)->DenseRange(5, 13, 2)->Complexity();

static void BM_yo13_conditional_max(benchmark::State& state) {
  ExclusivityGraph g = builtin_graph("yo13");
  HRepPolytope p = build_polytope(g, maximal_cliques(g), 3);
  ScenarioFunctionals pf = builtin_functionals("yo13");
  for (auto _ : state) {
    auto cm = conditional_max(p, pf.constraint, Rational(7, 6), Rational(4, 3), pf.envelope_body);
    benchmark::DoNotOptimize(cm);
  }
}
BENCHMARK(BM_yo13_conditional_max);

BENCHMARK_MAIN();
