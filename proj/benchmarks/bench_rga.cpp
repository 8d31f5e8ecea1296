#include <benchmark/benchmark.h>

#include <random>

#include "rgagrover/dense.hpp"
#include "rgagrover/optimizer.hpp"
#include "rgagrover/reduced.hpp"
#include "rgagrover/retraction.hpp"
#include "rgagrover/statevector.hpp"

using namespace rgagrover;

namespace {

RetractionKind kind_of(std::int64_t i) {
  return i == 5 ? RetractionKind::FiveFactor
                : (i == 6 ? RetractionKind::SixFactor : RetractionKind::EightFactor);
}

}  // namespace

static void BM_PlaneStep(benchmark::State& state) {
  const RetractionKind kind = kind_of(state.range(0));
  PlaneState s = PlaneState::initial(1.0 / 1024);
  for (auto _ : state) {
    const GradCoords g = grad_coords(s);
    const Mat2 m = transfer_matrix(retraction_gates(kind, 1e-3, g.x, g.y), s.q0);
    benchmark::DoNotOptimize(plane_step(s, m));
  }
}
BENCHMARK(BM_PlaneStep)->Arg(5)->Arg(6)->Arg(8);

static void BM_ExactLineSearch(benchmark::State& state) {
  const RetractionKind kind = kind_of(state.range(0));
  const PlaneState s = PlaneState::initial(1.0 / 32768);
  for (auto _ : state) benchmark::DoNotOptimize(exact_line_search(s, kind, ExactLineSearch{}));
}
BENCHMARK(BM_ExactLineSearch)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_RgaRunFixed(benchmark::State& state) {
  const GroverInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rga_run(inst, RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-4).iterations());
  }
}
BENCHMARK(BM_RgaRunFixed)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

static void BM_RgaRunEls(benchmark::State& state) {
  const GroverInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rga_run(inst, RetractionKind::EightFactor, ExactLineSearch{}, 1e-4).iterations());
  }
}
BENCHMARK(BM_RgaRunEls)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

static void BM_StatevectorRetraction(benchmark::State& state) {
  const GroverInstance inst =
      make_instance(static_cast<int>(state.range(0)), 1, std::nullopt, 1);
  FullState s = uniform_state(inst);
  const GateSequence seq = retraction_gates(RetractionKind::FiveFactor, 1e-3, 1.0, 0.0);
  for (auto _ : state) {
    apply_gates(s, seq, inst);
    benchmark::DoNotOptimize(s.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_StatevectorRetraction)->DenseRange(10, 20, 5);

static void BM_DenseGradient(benchmark::State& state) {
  const DenseOperators ops =
      build_operators(make_instance(static_cast<int>(state.range(0)), 1, std::nullopt, 1));
  std::mt19937_64 rng(3);
  const DenseOp u = random_reachable(ops, rng);
  for (auto _ : state) benchmark::DoNotOptimize(grad_coords_dense(u, ops));
}
BENCHMARK(BM_DenseGradient)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
