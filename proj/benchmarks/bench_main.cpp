#include <benchmark/benchmark.h>

#include "fncalc/exterior/bracket.hpp"
#include "fncalc/exterior/sampling.hpp"
#include "fncalc/g2/structure.hpp"
#include "fncalc/linfty/model.hpp"
#include "fncalc/linalg/elimination.hpp"
#include "fncalc/linfty/brackets.hpp"
#include "fncalc/torus/spectral.hpp"
#include "fncalc/torus/sweep.hpp"

using namespace fncalc;

namespace {

const torus::ModeOperators& star_phi_ops() {
  static const torus::ModeOperators ops(g2::star_phi(g2::standard_phi(exterior::ModelSpace::toroidal(7))));
  return ops;
}

}  // namespace

static void BM_FnBracket(benchmark::State& state) {
  const auto space = exterior::ModelSpace::affine(static_cast<int>(state.range(0)));
  exterior::Sampler sampler(1);
  std::vector<std::pair<exterior::VectorValuedForm, exterior::VectorValuedForm>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(sampler.vector_form(space, sampler.integer(0, 3)), sampler.vector_form(space, sampler.integer(0, 3)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [k, l] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(exterior::fn_bracket(k, l));
  }
}
BENCHMARK(BM_FnBracket)->Arg(4)->Arg(7);

static void BM_MaurerCartanStarPhi(benchmark::State& state) {
  const auto psi = g2::star_phi(g2::standard_phi(exterior::ModelSpace::affine(7)));
  for (auto _ : state) benchmark::DoNotOptimize(exterior::mc_check(psi));
}
BENCHMARK(BM_MaurerCartanStarPhi);

static void BM_ExactRank(benchmark::State& state) {
  const auto& ops = star_phi_ops();
  const torus::Frequency k{1, -1, 0, 1, 0, 0, 1};
  const auto m = ops.lie(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(3)->Arg(4)->Arg(5);

static void BM_ModeReport(benchmark::State& state) {
  const auto& ops = star_phi_ops();
  const torus::Frequency k{1, -1, 0, 1, 0, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(torus::decomposition_report(ops, k, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ModeReport)->DenseRange(2, 5);

static void BM_SweepStarPhiDegree(benchmark::State& state) {
  torus::SweepConfig config;
  config.max_freq = 1;
  config.degrees = {static_cast<int>(state.range(0))};
  config.threads = 1;
  config.anticommutation = false;
  config.vector_fields = false;
  for (auto _ : state) benchmark::DoNotOptimize(torus::sweep(star_phi_ops(), config));
}
BENCHMARK(BM_SweepStarPhiDegree)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_LinftyJacobi(benchmark::State& state) {
  const linfty::FlatAssociativeModel model({1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(linfty::jacobi_suite(model, 3, 5, 7));
}
BENCHMARK(BM_LinftyJacobi)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
