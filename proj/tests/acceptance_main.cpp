// Copyright 2026 The ordinalscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Each check prints one PASS/FAIL line with
// the measured numbers; the process exits nonzero if any check fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ordinalscan/generators.hpp"
#include "ordinalscan/ordinal.hpp"
#include "ordinalscan/patterns.hpp"
#include "ordinalscan/stats.hpp"
#include "ordinalscan/time_series.hpp"
#include "ordinalscan/window.hpp"

using namespace ordinalscan;

namespace {

int failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }

  void report(bool ok, const std::string& detail) {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    std::printf("[%s] %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", name_.c_str(),
                detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!ok) ++failures;
  }

 private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

OrdinalValues values_of(std::array<double, 6> p) {
  PatternFrequencies f;
  f.p = p;
  f.valid = 1;
  return ordinal_values(f);
}

TimeSeries ar2_series(std::size_t length, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = ProcessKind::ar2;
  spec.length = length;
  spec.seed = seed;
  return generate(spec);
}

// 1. The five-term partition identity on 1e5 random probability vectors.
void criterion_partition_identity() {
  Criterion c("1 partition identity");
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    std::array<double, 6> p{};
    double sum = 0;
    for (auto& v : p) {
      v = -std::log(1.0 - unif(rng));
      sum += v;
    }
    for (auto& v : p) v /= sum;
    const auto v = values_of(p);
    const double lhs = 4.0 * v.delta_sq;
    const double rhs = 3.0 * v.tau * v.tau + 2.0 * v.beta * v.beta + v.gamma * v.gamma +
                       v.delta * v.delta + v.epsilon * v.epsilon;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  c.report(worst <= 1e-12, fmt("max |4*dsq - sum| = %.3e (tol 1e-12)", worst));
}

// 2. Cyclic exactness: epsilon = 0 and the four-term formula on random series.
void criterion_cyclic_exactness() {
  Criterion c("2 cyclic exactness");
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_eps = 0;
  double worst_four = 0;
  bool count_identity_ok = true;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t T = 64 + static_cast<std::size_t>(rng() % 4937);  // up to 5000
    TimeSeries x;
    x.values.resize(T);
    for (auto& v : x.values) v = unif(rng);
    for (std::size_t d = 1; d <= (T - 1) / 2; ++d) {
      const auto h = count_patterns3(x, d, Boundary::cyclic);
      // integer form: local maxima and minima balance exactly on cycles
      if (h.counts[pat231] + h.counts[pat132] != h.counts[pat213] + h.counts[pat312]) {
        count_identity_ok = false;
      }
      const auto v = ordinal_values(to_frequencies(h));
      worst_eps = std::max(worst_eps, std::abs(v.epsilon));
      const double four = 3.0 * v.tau * v.tau + 2.0 * v.beta * v.beta +
                          v.gamma * v.gamma + v.delta * v.delta;
      worst_four = std::max(worst_four, std::abs(4.0 * v.delta_sq - four));
    }
  }
  c.report(count_identity_ok && worst_eps <= 1e-12 && worst_four <= 1e-12,
           fmt("max |eps| = %.3e, max four-term error = %.3e (tol 1e-12)", worst_eps,
               worst_four));
}

// 3. Linear-mode residual on long AR2 samples stays below 1%.
void criterion_linear_residual() {
  Criterion c("3 linear residual");
  const std::size_t T = 100000;
  const double gate = 15.0 / static_cast<double>(T);
  double residual_sum = 0;
  std::size_t cells = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TimeSeries x = ar2_series(T, seed);
    for (std::size_t d = 1; d <= 50; ++d) {
      const auto v = ordinal_values(to_frequencies(count_patterns3(x, d)));
      if (v.delta_sq < gate || v.delta_sq == 0.0) continue;
      residual_sum += partition(v, gate).residual;
      ++cells;
    }
  }
  const double mean_residual = cells > 0 ? residual_sum / static_cast<double>(cells) : 1.0;
  c.report(cells > 0 && mean_residual < 0.01,
           fmt("mean residual = %.3e over %zu ungated cells (tol < 0.01)", mean_residual,
               cells));
}

// 4. The AR2 window study: corrected tau_tilde and gated share for both
//    window sizes.
void criterion_ar2_table() {
  Criterion c("4 AR2 window study");
  bool ok = true;
  std::string detail;

  struct Config {
    std::size_t n;
    std::size_t dmax;
    double tau_expected;    // percent
    double gated_expected;  // percent
  };
  const Config configs[] = {{10000, 50, 98.9, 20.0}, {2000, 100, 97.7, 76.0}};

  for (const Config& cfg : configs) {
    const std::size_t windows = 1000;
    const TimeSeries x = ar2_series(cfg.n * windows, 1000 + cfg.n);
    WindowPlan plan;
    plan.window_length = cfg.n;
    plan.step = cfg.n;
    for (std::size_t d = 1; d <= cfg.dmax; ++d) plan.delays.push_back(d);
    const PartitionMaps maps = run_partition_map(x, plan);
    const double tau_pct = 100.0 * maps.avg_tau_tilde;
    const double gated_pct = 100.0 * maps.gated_fraction;
    const bool tau_ok = std::abs(tau_pct - cfg.tau_expected) <= 1.5;
    const bool gated_ok = std::abs(gated_pct - cfg.gated_expected) <= 10.0;
    ok = ok && tau_ok && gated_ok;
    detail += fmt("n=%zu: tau~=%.2f%% (want %.1f+-1.5), gated=%.1f%% (want %.0f+-10); ",
                  cfg.n, tau_pct, cfg.tau_expected, gated_pct, cfg.gated_expected);
  }
  c.report(ok, detail);
}

// 5. Brownian persistence near 1/6 with a data-driven error bar.
void criterion_brownian() {
  Criterion c("5 brownian persistence");
  const std::size_t T = 100000;
  const std::size_t dmax = 100;

  // per-delay c estimated from independent Brownian windows
  const std::size_t cal_windows = 40;
  const std::size_t cal_n = 2500;
  std::vector<std::vector<double>> samples(dmax + 1);
  GeneratorSpec cal;
  cal.kind = ProcessKind::brownian;
  cal.length = cal_n;
  for (std::size_t w = 0; w < cal_windows; ++w) {
    cal.seed = 500000 + w;
    const TimeSeries piece = generate(cal);
    for (std::size_t d = 1; d <= dmax; ++d) {
      const auto v = ordinal_values(to_frequencies(count_patterns3(piece, d)));
      samples[d].push_back(v.tau);
    }
  }

  GeneratorSpec spec;
  spec.kind = ProcessKind::brownian;
  spec.length = T;
  spec.seed = 31415;
  const TimeSeries x = generate(spec);
  std::size_t inside = 0;
  for (std::size_t d = 1; d <= dmax; ++d) {
    const double c_hat = estimate_c(samples[d], cal_n).c;
    const double band = 3.0 * c_hat / std::sqrt(static_cast<double>(T));
    const auto v = ordinal_values(to_frequencies(count_patterns3(x, d)));
    if (std::abs(v.tau - 1.0 / 6.0) <= band) ++inside;
  }
  const double frac = static_cast<double>(inside) / static_cast<double>(dmax);
  c.report(frac >= 0.95, fmt("tau within 1/6 +- 3c/sqrt(T) for %.0f%% of d (need 95%%)",
                             100.0 * frac));
}

// 6. White-noise calibration at the n >= 160000 window size.
void criterion_white_noise_calibration() {
  Criterion c("6 white-noise calibration");
  const std::size_t T = 160000;
  std::size_t good_seeds = 0;
  const std::size_t seeds = 100;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    GeneratorSpec spec;
    spec.kind = ProcessKind::white_noise;
    spec.length = T;
    spec.seed = 7000 + seed;
    const TimeSeries x = generate(spec);
    double worst = 0;
    for (std::size_t d = 1; d <= 50; ++d) {
      const double beta = beta_pairwise(count_pairs(x, d));
      worst = std::max(worst, std::abs(beta));
    }
    if (worst <= 0.01) ++good_seeds;
  }
  const double frac = static_cast<double>(good_seeds) / static_cast<double>(seeds);
  c.report(frac >= 0.90,
           fmt("max |beta(d)| <= 0.01 in %.0f%% of %zu seeds (need 90%%)", 100.0 * frac,
               seeds));
}

// 7. Robustness: outliers and a slow trend barely move tau; outliers ruin
//    rho; a monotone transform changes nothing at all.
void criterion_robustness() {
  Criterion c("7 robustness");
  const std::size_t T = 20000;
  const TimeSeries x = ar2_series(T, 4242);

  DisturbanceSpec out_spec;
  out_spec.kind = DisturbanceKind::outliers;
  out_spec.fraction = 0.01;
  out_spec.amplitude_sigmas = 20.0;
  out_spec.seed = 1;
  const TimeSeries with_outliers = disturb(x, out_spec);

  DisturbanceSpec trend_spec;
  trend_spec.kind = DisturbanceKind::low_freq;
  trend_spec.period_scale = 300.0;
  const TimeSeries with_trend = disturb(x, trend_spec);

  DisturbanceSpec exp_spec;
  exp_spec.kind = DisturbanceKind::monotone_transform;
  exp_spec.transform_scale = 7.0;
  const TimeSeries transformed = disturb(x, exp_spec);

  bool counts_identical = true;
  double dtau_outliers = 0, dtau_trend = 0, drho_outliers = 0;
  for (std::size_t d = 1; d <= 50; ++d) {
    const auto clean = count_patterns3(x, d);
    const auto trans = count_patterns3(transformed, d);
    if (clean.counts != trans.counts || clean.excluded_ties != trans.excluded_ties ||
        clean.excluded_missing != trans.excluded_missing) {
      counts_identical = false;
    }
    const double tau_clean = ordinal_values(to_frequencies(clean)).tau;
    const double tau_out =
        ordinal_values(to_frequencies(count_patterns3(with_outliers, d))).tau;
    const double tau_tr =
        ordinal_values(to_frequencies(count_patterns3(with_trend, d))).tau;
    dtau_outliers += std::abs(tau_out - tau_clean);
    dtau_trend += std::abs(tau_tr - tau_clean);
    drho_outliers += std::abs(autocorr(with_outliers, d) - autocorr(x, d));
  }
  dtau_outliers /= 50.0;
  dtau_trend /= 50.0;
  drho_outliers /= 50.0;

  const bool ok = counts_identical && dtau_outliers <= 0.05 && dtau_trend <= 0.05 &&
                  drho_outliers > 0.1;
  c.report(ok, fmt("transform counts identical=%d; mean|dtau|: outliers %.4f, trend %.4f "
                   "(tol 0.05); mean|drho| outliers %.3f (need > 0.1)",
                   counts_identical ? 1 : 0, dtau_outliers, dtau_trend, drho_outliers));
}

// 8. Monotone extremes, exact up to floating rounding.
void criterion_monotone_extremes() {
  Criterion c("8 monotone extremes");
  TimeSeries x;
  x.values.resize(1000);
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    x.values[i] = static_cast<double>(i);
  }
  const auto v = ordinal_values(to_frequencies(count_patterns3(x, 5)));
  const auto parts = partition(v, 15.0 / 1000.0);
  const double e_tau = std::abs(v.tau - 2.0 / 3.0);
  const double e_dsq = std::abs(v.delta_sq - 5.0 / 6.0);
  const double e_tt = std::abs(parts.tau_tilde - 0.4);
  const double e_bt = std::abs(parts.beta_tilde - 0.6);
  const double tol = 1e-15;  // exact values up to a final rounding
  c.report(e_tau <= tol && e_dsq <= tol && e_tt <= tol && e_bt <= tol,
           fmt("errors: tau %.1e, dsq %.1e, tau~ %.1e, beta~ %.1e (tol 1e-15)", e_tau,
               e_dsq, e_tt, e_bt));
}

// 9. The beta-doubling identity, exact in cyclic mode and inside d/(T-d)
//    on tie-free linear series.
void criterion_identity_suite() {
  Criterion c("9 identity suite");
  std::mt19937_64 rng(999);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_cyclic = 0;
  double worst_linear_excess = 0;
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t T = 500 + static_cast<std::size_t>(rng() % 1500);
    TimeSeries x;
    x.values.resize(T);
    for (auto& v : x.values) v = unif(rng);
    for (std::size_t d = 1; d <= (T - 1) / 4; ++d) {
      const auto cyc = check_identities(x, d, Boundary::cyclic);
      worst_cyclic = std::max(worst_cyclic, std::abs(cyc.beta_double));
      const auto lin = check_identities(x, d, Boundary::linear);
      const double bound = static_cast<double>(d) / static_cast<double>(T - d);
      worst_linear_excess =
          std::max(worst_linear_excess, std::abs(lin.beta_double) - bound);
    }
  }
  c.report(worst_cyclic <= 1e-12 && worst_linear_excess <= 0,
           fmt("cyclic max = %.3e (tol 1e-12); linear max excess over d/(T-d) = %.3e",
               worst_cyclic, worst_linear_excess));
}

// 10. The 11-of-11 median test p-value, bit-exact.
void criterion_median_test() {
  Criterion c("10 median test");
  const auto r = median_test(11, 11, Sided::one);
  const double expected = std::ldexp(1.0, -11);
  c.report(r.p_value == expected,
           fmt("p = %.12g, expected 2^-11 = %.12g", r.p_value, expected));
}

// 11. The Taylor rescaling of entropy near the uniform distribution.
void criterion_taylor() {
  Criterion c("11 taylor rescaling");
  std::mt19937_64 rng(2222);
  std::uniform_real_distribution<double> unif(-0.01, 0.01);
  double worst = 0;
  for (int rep = 0; rep < 100000; ++rep) {
    std::array<double, 6> p{};
    double shift = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      const double e = unif(rng);
      p[i] = 1.0 / 6.0 + e;
      shift += e;
    }
    p[5] = 1.0 / 6.0 - shift;
    if (std::abs(p[5] - 1.0 / 6.0) > 0.01) continue;
    const auto v = values_of(p);
    worst = std::max(worst, std::abs(v.entropy - taylor_entropy_approx(v.delta_sq)));
  }
  c.report(worst <= 1e-3, fmt("max |H - (log6 - 3*dsq)| = %.3e (tol 1e-3)", worst));
}

}  // namespace

int main() {
  criterion_partition_identity();
  criterion_cyclic_exactness();
  criterion_linear_residual();
  criterion_ar2_table();
  criterion_brownian();
  criterion_white_noise_calibration();
  criterion_robustness();
  criterion_monotone_extremes();
  criterion_identity_suite();
  criterion_median_test();
  criterion_taylor();

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
