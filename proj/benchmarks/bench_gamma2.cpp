#include <benchmark/benchmark.h>

#include <random>

#include "graphprod/gamma2.hpp"

namespace {

gp::KernelMatrix psd_unit_diag(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd v(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) v(i, j) = gauss(rng);
  }
  Eigen::MatrixXd gram = v * v.transpose();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) gram(i, j) /= std::sqrt(gram(i, i) * gram(j, j));
    }
  }
  gram.diagonal().setOnes();
  gp::KernelMatrix km;
  km.entries = gram.cast<std::complex<double>>();
  for (int i = 0; i < n; ++i) km.labels.push_back(std::to_string(i));
  return km;
}

void BM_gamma2_psd(benchmark::State& state) {
  gp::KernelMatrix km = psd_unit_diag(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::gamma2(km));
  }
}
BENCHMARK(BM_gamma2_psd)->Arg(10)->Arg(40)->Arg(100);

void BM_gamma2_indicator(benchmark::State& state) {
  // Off-diagonal 0/1 pattern: exercises the bisection path.
  int n = static_cast<int>(state.range(0));
  gp::KernelMatrix km;
  km.entries = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    km.labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if ((i + j) % 3 == 1) km.entries(i, j) = 1.0;
    }
  }
  gp::Gamma2Options opts;
  opts.max_projection_iters = 600;
  opts.max_bisection_steps = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gp::gamma2(km, opts));
  }
}
BENCHMARK(BM_gamma2_indicator)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
