// Kernel timings: serial convolution vs the OpenMP split vs the linear
// recurrence, and the sampler at 1 vs max workers. Every pair is checked
// for exact agreement before its row is printed, so the benchmark doubles
// as a smoke test.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "permsub/montecarlo.hpp"
#include "permsub/series.hpp"

using namespace permsub;

namespace {

double run_ms(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const std::chrono::duration<double, std::milli> d =
      std::chrono::steady_clock::now() - start;
  return d.count();
}

void row(const std::string& name, double base_ms, double other_ms, bool agree) {
  std::printf("%-34s %10.1f %10.1f %7.2fx   %s\n", name.c_str(), base_ms,
              other_ms, base_ms / other_ms, agree ? "agree" : "MISMATCH");
}

} // namespace

int main() {
  const int n_max = 1500;
  const int mc_samples = 200000;
  std::printf("workers available: %d\n\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial/ms", "other/ms",
              "ratio");

  CoefficientTable serial, parallel, linear;
  const double conv_s = run_ms([&] { serial = pj_coefficients(1, n_max); });
  const double conv_p =
      run_ms([&] { parallel = pj_coefficients_parallel(1, n_max); });
  row("pj convolution, omp split", conv_s, conv_p,
      serial.coeff == parallel.coeff);
  const double conv_l =
      run_ms([&] { linear = pj_coefficients_linear(1, n_max); });
  row("pj convolution, linear recurrence", conv_s, conv_l,
      serial.coeff == linear.coeff);

  CoefficientTable lj_s, lj_p;
  const double l_s = run_ms([&] { lj_s = lj_coefficients(1, n_max); });
  const double l_p = run_ms([&] { lj_p = lj_coefficients_parallel(1, n_max); });
  row("lj convolution, omp split", l_s, l_p, lj_s.coeff == lj_p.coeff);

  McConfig cfg;
  cfg.n = 40;
  cfg.pattern = Permutation::parse("2 1 3");
  cfg.k = 4;
  cfg.samples = mc_samples;
  cfg.seed = 1234;
  cfg.workers = 1;
  McEstimate one, many;
  const double mc_1 = run_ms([&] { one = estimate_not_avsk(cfg); });
  cfg.workers = omp_get_max_threads();
  const double mc_w = run_ms([&] { many = estimate_not_avsk(cfg); });
  row("sampler, " + std::to_string(cfg.workers) + " workers", mc_1, mc_w,
      one.estimate == many.estimate && one.capped == many.capped);
  return 0;
}
