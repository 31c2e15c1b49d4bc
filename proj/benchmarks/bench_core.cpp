#include <random>

#include <benchmark/benchmark.h>

#include "absdil/abelian_dilation.hpp"
#include "absdil/folner.hpp"
#include "absdil/gram.hpp"
#include "absdil/s3_pipeline.hpp"

using namespace absdil;

namespace {

CMatrix random_psd(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  CMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = Complex(g(rng), g(rng));
  return b * adjoint(b);
}

void BM_HermitianEigen(benchmark::State& state) {
  const CMatrix a = random_psd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(a));
}
BENCHMARK(BM_HermitianEigen)->Arg(6)->Arg(12)->Arg(24)->Arg(48);

void BM_ExactRank(benchmark::State& state) {
  const XMatrix m = run_s3_report().m;
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_ExactRank);

void BM_S3Report(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_s3_report());
}
BENCHMARK(BM_S3Report)->Unit(benchmark::kMillisecond);

void BM_DilationResidual(benchmark::State& state) {
  const FiniteGroup g = build_group(GroupSpec::cyclic(4));
  const GroupFunction u(g, std::vector<Complex>{1.0, 0.5, 0.25, 0.5});
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  const DilationModel model = build_dilation(u, depth);
  std::vector<Complex> f(4);
  f[1] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(dilation_residual(model, depth, f));
  state.counters["states"] = static_cast<double>(model.state_size());
}
BENCHMARK(BM_DilationResidual)->DenseRange(1, 5);

void BM_MultDefect(benchmark::State& state) {
  const DiscreteGroup z = build_discrete_group(GroupSpec::integers());
  const auto windows = folner_sequence(z, FolnerKind::kIntervals, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mult_defect(windows.back(), 3, -2));
}
BENCHMARK(BM_MultDefect)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
