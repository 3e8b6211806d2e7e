#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "disksharp/constants.hpp"
#include "disksharp/extremal.hpp"
#include "disksharp/quadrature.hpp"
#include "disksharp/specfun.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_gamma(benchmark::State& state) {
  double x = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(disksharp::gamma(x));
    x = x < 40.0 ? x + 0.1 : 0.7;
  }
}
BENCHMARK(BM_gamma);

void BM_hyp2f1_mid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::hyp2f1(-0.7, -0.2, 1.6, 0.5));
}
BENCHMARK(BM_hyp2f1_mid);

void BM_hyp2f1_near_one(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::hyp2f1(-0.7, -0.2, 1.6, 0.9801));
}
BENCHMARK(BM_hyp2f1_near_one);

void BM_directional_constant(benchmark::State& state) {
  const auto e = disksharp::Exponent::from_p(3.0);
  const disksharp::DiskPoint z(0.6, 0.4);
  const disksharp::Direction d(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::directional_constant(e, z, d).value);
}
BENCHMARK(BM_directional_constant);

void BM_global_constant(benchmark::State& state) {
  const auto e = disksharp::Exponent::from_p(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::global_constant(e).value);
}
BENCHMARK(BM_global_constant)->Arg(2)->Arg(5)->Arg(20);

void BM_wirtinger_closed(benchmark::State& state) {
  const auto e = disksharp::Exponent::from_p(1.2);
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::wirtinger_constant(e, 0.9).value);
}
BENCHMARK(BM_wirtinger_closed);

void BM_sharpness_ratio(benchmark::State& state) {
  const auto e = disksharp::Exponent::from_p(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::sharpness_ratio_Cp(e, 0.99));
}
BENCHMARK(BM_sharpness_ratio);

void BM_periodic_kink_integral(benchmark::State& state) {
  const double q = 1.5, r = 0.9;
  const auto f = [=](double s) {
    return std::pow(std::abs(std::cos(s)), q) *
           std::pow(1.0 + r * r - 2.0 * r * std::cos(s), q - 1.0);
  };
  const disksharp::KinkSet ks{kPi / 2.0, 3.0 * kPi / 2.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(disksharp::integrate_periodic(f, ks, 1e-10).value);
}
BENCHMARK(BM_periodic_kink_integral);

}  // namespace

BENCHMARK_MAIN();
