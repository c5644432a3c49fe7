#include <benchmark/benchmark.h>

#include <random>

#include "spectral/fourier.hpp"
#include "spectral/spectra.hpp"
#include "spectral/tiling.hpp"
#include "spectral/zeroset.hpp"

using namespace spectral;

namespace {

const ConvexPolygon h0({{0.5, -0.5}, {0.5, 0.5}, {0.0, 0.75}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, -0.75}});

std::vector<Point2> frequencies(std::size_t n, double radius) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<Point2> xs(n);
  for (auto& x : xs) x = {u(rng), u(rng)};
  return xs;
}

void BM_ft_polygon(benchmark::State& state) {
  const auto poly = regular_polygon(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto xs = frequencies(1024, 20);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ft_polygon(poly, xs[i++ & 1023]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ft_polygon)->Arg(4)->Arg(8)->Arg(32);

void BM_ft_quadrature_disc(benchmark::State& state) {
  const ConvexBody disc(validate_graph_body(-0.5, 0.5, HeightFunction::semicircle(0, 0.5),
                                            HeightFunction::semicircle(0, 0.5)));
  const auto xs = frequencies(64, static_cast<double>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ft_quadrature(disc, xs[i++ & 63]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ft_quadrature_disc)->Arg(5)->Arg(50);

void BM_orthogonality_h0(benchmark::State& state) {
  const ConvexBody body(h0);
  const auto cand = SpectrumCandidate::from_lattice(dual_lattice(tiling_lattice(h0)));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_check(body, cand, static_cast<double>(state.range(0)), 1e-9));
}
BENCHMARK(BM_orthogonality_h0)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_verify_tiling_h0(benchmark::State& state) {
  const auto L = tiling_lattice(h0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_tiling(h0, L, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_verify_tiling_h0)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_zeros_on_segment(benchmark::State& state) {
  const ConvexBody body(h0);
  for (auto _ : state) benchmark::DoNotOptimize(zeros_on_segment(body, {50.0, 0.13}, {60.0, 0.13}));
}
BENCHMARK(BM_zeros_on_segment)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
