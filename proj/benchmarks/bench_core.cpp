#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "arborpack/ratios.hpp"
#include "arborpack/solver.hpp"
#include "arborpack/subpartition.hpp"
#include "arborpack/uncross.hpp"

namespace {

using namespace arborpack;

Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, arcs);
}

Digraph doubled_cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < n; ++v) {
    arcs.emplace_back(v, (v + 1) % n);
    arcs.emplace_back((v + 1) % n, v);
  }
  return Digraph(n, arcs);
}

void BM_subpartition_enumeration(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for_each_subpartition(n, 1, [&](const SubPartition&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_subpartition_enumeration)->Arg(5)->Arg(7)->Arg(9);

void BM_nu_f_digraph(benchmark::State& state) {
  Digraph d = doubled_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RatioWitness w = nu_f_digraph(d);
    benchmark::DoNotOptimize(w.value);
  }
}
BENCHMARK(BM_nu_f_digraph)->Arg(5)->Arg(7)->Arg(9);

void BM_pieo_run(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<VertexSet> left;
  std::vector<VertexSet> right;
  for (int v = 0; v + 1 < n; v += 2) left.push_back(VertexSet::of({v, v + 1}));
  for (int v = 1; v + 1 < n; v += 2) right.push_back(VertexSet::of({v, v + 1}));
  SubPartition p1(left);
  SubPartition p2(right);
  for (auto _ : state) {
    PieoTrace trace = pieo_run(p1, p2);
    benchmark::DoNotOptimize(trace.final_family.size());
  }
}
BENCHMARK(BM_pieo_run)->Arg(6)->Arg(10)->Arg(14);

void BM_solve_exhaustive(benchmark::State& state) {
  Digraph d = doubled_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cert = solve_exhaustive(d, 1, 1);
    benchmark::DoNotOptimize(cert.has_value());
  }
}
BENCHMARK(BM_solve_exhaustive)->Arg(4)->Arg(5);

void BM_solve_trace(benchmark::State& state) {
  Digraph d = doubled_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SolveOutcome outcome = solve_theorem7(d, 1, 1, SolveMode::proof_trace);
    benchmark::DoNotOptimize(outcome.certificate.trees.size());
  }
}
BENCHMARK(BM_solve_trace)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
