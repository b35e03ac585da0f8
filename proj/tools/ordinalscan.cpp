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

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordinalscan/errors.hpp"
#include "ordinalscan/generators.hpp"
#include "ordinalscan/ordinal.hpp"
#include "ordinalscan/parallel.hpp"
#include "ordinalscan/patterns.hpp"
#include "ordinalscan/series_io.hpp"
#include "ordinalscan/stats.hpp"
#include "ordinalscan/time_series.hpp"
#include "ordinalscan/window.hpp"

namespace {

using namespace ordinalscan;

struct GlobalOptions {
  std::string input;
  std::string format = "csv";  // csv | csv2 | raw
  std::string missing_token = "NaN";
  double delay_min = 1;
  double delay_max = 50;
  double window = 10000;
  double step = 0;  // 0 = non-overlapping (step = window)
  double gate = -1;  // < 0 = default 15/n
  bool cyclic = false;
  bool cumsum = false;
  std::string cumsum_policy = "propagate";
  double hz = 0;  // > 0: delay/window/step/band flags are in seconds
  unsigned threads = 0;
};

SeriesFileFormat input_format(const GlobalOptions& g) {
  SeriesFileFormat fmt;
  fmt.missing_token = g.missing_token;
  if (g.format == "csv") {
    fmt.format = SeriesFormat::csv_single_column;
  } else if (g.format == "csv2") {
    fmt.format = SeriesFormat::csv_two_column;
  } else if (g.format == "raw") {
    fmt.format = SeriesFormat::raw_f64le;
  } else {
    throw DomainError("unknown series format '" + g.format + "' (csv, csv2, raw)");
  }
  return fmt;
}

// Flags carrying sample counts may be given in seconds when --hz is set.
std::size_t to_samples(double v, const GlobalOptions& g) {
  const double samples = g.hz > 0 ? v * g.hz : v;
  if (!(samples >= 0) || samples > 9.0e15) {
    throw DomainError("value out of range after unit conversion");
  }
  return static_cast<std::size_t>(std::llround(samples));
}

TimeSeries load_input(const GlobalOptions& g) {
  if (g.input.empty()) {
    throw DomainError("an input file is required (--input)");
  }
  TimeSeries x = load_series(g.input, input_format(g));
  if (g.hz > 0) x.sample_rate_hz = g.hz;
  if (g.cumsum) {
    const CumulativePolicy policy = g.cumsum_policy == "skip-missing"
                                        ? CumulativePolicy::skip_missing
                                        : CumulativePolicy::propagate;
    x = cumulative_preprocess(x, policy);
  }
  return x;
}

std::vector<std::size_t> delay_grid(const GlobalOptions& g, std::size_t T_or_window) {
  const std::size_t lo = std::max<std::size_t>(1, to_samples(g.delay_min, g));
  std::size_t hi = to_samples(g.delay_max, g);
  const std::size_t cap = T_or_window >= 3 ? (T_or_window - 1) / 2 : 0;
  if (hi > cap) hi = cap;
  std::vector<std::size_t> delays;
  for (std::size_t d = lo; d <= hi; ++d) delays.push_back(d);
  if (delays.empty()) {
    throw DomainError("empty delay range after clipping to the data");
  }
  return delays;
}

WindowPlan make_plan(const GlobalOptions& g) {
  WindowPlan plan;
  plan.window_length = to_samples(g.window, g);
  plan.step = g.step > 0 ? to_samples(g.step, g) : plan.window_length;
  plan.delays = delay_grid(g, plan.window_length);
  plan.mode = g.cyclic ? Boundary::cyclic : Boundary::linear;
  plan.gate_threshold = g.gate;
  return plan;
}

void warn_large_delays(const std::vector<std::size_t>& delays, std::size_t n) {
  if (!delays.empty() && large_delay_warning(delays.back(), n)) {
    std::cerr << "warning: delay " << delays.back() << " exceeds 5% of the window ("
              << n << "); boundary errors of order d/n apply\n";
  }
}

FILE* open_output(const std::string& out, std::string& err) {
  if (out.empty() || out == "-") return stdout;
  FILE* f = std::fopen((out + ".tmp").c_str(), "w");
  if (!f) err = "cannot open '" + out + ".tmp' for writing";
  return f;
}

void close_output(FILE* f, const std::string& out) {
  if (f == stdout) return;
  std::fclose(f);
  std::error_code ec;
  std::filesystem::rename(out + ".tmp", out, ec);
  if (ec) throw IoError("cannot finalize '" + out + "': " + ec.message());
}

int cmd_profile(const GlobalOptions& g, const std::string& out) {
  const TimeSeries x = load_input(g);
  validate(x);
  const auto delays = delay_grid(g, x.size());
  warn_large_delays(delays, x.size());
  const Boundary mode = g.cyclic ? Boundary::cyclic : Boundary::linear;

  struct Row {
    std::size_t d;
    OrdinalValues v;
    double beta_pair;
    double rho;
    bool ok;
  };
  std::vector<Row> rows(delays.size());
  parallel_for(0, delays.size(), g.threads, [&](std::size_t i) {
    Row& r = rows[i];
    r.d = delays[i];
    const PatternHistogram h = count_patterns3(x, r.d, mode);
    if (h.valid == 0) {
      r.ok = false;
      return;
    }
    r.ok = true;
    r.v = ordinal_values(to_frequencies(h));
    const PairCounts c = count_pairs(x, r.d, mode);
    r.beta_pair = c.n12 + c.n21 > 0 ? beta_pairwise(c) : missing_value();
    r.rho = mode == Boundary::linear ? autocorr(x, r.d) : missing_value();
  });

  std::string err;
  FILE* f = open_output(out, err);
  if (!f) throw IoError(err);
  std::fprintf(f, "d,S,beta,beta_pair,tau,gamma,delta,epsilon,delta_sq,entropy,divergence,rho\n");
  for (const Row& r : rows) {
    if (!r.ok) {
      std::fprintf(f, "%zu,0,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN,NaN\n", r.d);
      continue;
    }
    std::fprintf(f, "%zu,%llu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.d,
                 static_cast<unsigned long long>(r.v.valid), r.v.beta, r.beta_pair, r.v.tau,
                 r.v.gamma, r.v.delta, r.v.epsilon, r.v.delta_sq, r.v.entropy,
                 r.v.divergence, r.rho);
  }
  close_output(f, out);
  return 0;
}

MapExportFormat map_export_format(const std::string& map_format, const WindowMap& m,
                                  double range_lo, double range_hi) {
  MapExportFormat fmt;
  if (map_format == "csv") {
    fmt.format = MapFormat::csv_matrix;
    return fmt;
  }
  if (map_format != "pgm") {
    throw DomainError("unknown map format '" + map_format + "' (csv, pgm)");
  }
  fmt.format = MapFormat::pgm_p5;
  if (range_lo < range_hi) {
    fmt.lo = range_lo;
    fmt.hi = range_hi;
  } else {
    // default to the data range of unmasked cells
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.values.size(); ++i) {
      if (!m.mask[i]) {
        lo = std::min(lo, m.values[i]);
        hi = std::max(hi, m.values[i]);
      }
    }
    if (!(lo < hi)) {
      lo = 0;
      hi = 1;
    }
    fmt.lo = lo;
    fmt.hi = hi;
  }
  return fmt;
}

int cmd_map(const GlobalOptions& g, const std::string& stat, const std::string& out,
            const std::string& map_format, double range_lo, double range_hi) {
  const TimeSeries x = load_input(g);
  validate(x);
  const WindowPlan plan = make_plan(g);
  warn_large_delays(plan.delays, plan.window_length);
  const WindowMap m = run_map(x, plan, stat_from_name(stat), g.threads);
  export_map(m, map_export_format(map_format, m, range_lo, range_hi), out);
  std::fprintf(stderr, "map: %zu delays x %zu windows -> %s\n", m.rows(), m.cols(),
               out.c_str());
  return 0;
}

int cmd_partition(const GlobalOptions& g, const std::string& prefix,
                  const std::string& map_format) {
  const TimeSeries x = load_input(g);
  validate(x);
  const WindowPlan plan = make_plan(g);
  warn_large_delays(plan.delays, plan.window_length);
  const PartitionMaps maps = run_partition_map(x, plan, g.threads);

  const auto write = [&](const WindowMap& m) {
    const std::string path = prefix + "_" + m.stat + (map_format == "pgm" ? ".pgm" : ".csv");
    export_map(m, map_export_format(map_format, m, 0, 0), path);
  };
  write(maps.tau_tilde);
  write(maps.beta_tilde);
  write(maps.gamma_tilde);
  write(maps.delta_tilde);

  std::printf("windows,%zu\ndelays,%zu\ngate,%.9g\n", maps.tau_tilde.cols(),
              maps.tau_tilde.rows(), plan.gate());
  std::printf("gated_fraction,%.9g\n", maps.gated_fraction);
  std::printf("tau_tilde,%.9g\nbeta_tilde,%.9g\ngamma_tilde,%.9g\ndelta_tilde,%.9g\n",
              maps.avg_tau_tilde, maps.avg_beta_tilde, maps.avg_gamma_tilde,
              maps.avg_delta_tilde);
  std::printf("mean_residual,%.9g\n", maps.mean_residual);
  return 0;
}

int cmd_summary(const GlobalOptions& g, double band_min, double band_max,
                const std::string& out) {
  const TimeSeries x = load_input(g);
  validate(x);
  const WindowPlan plan = make_plan(g);
  const auto rows = run_summary(x, plan, to_samples(band_min, g), to_samples(band_max, g),
                                g.threads);
  std::string err;
  FILE* f = open_output(out, err);
  if (!f) throw IoError(err);
  std::fprintf(f, "start,mean_abs,mean_delta_sq,ungated_fraction\n");
  for (const auto& s : rows) {
    std::fprintf(f, "%zu,%.9g,%.9g,%.9g\n", s.start, s.mean_abs_amplitude, s.mean_delta_sq,
                 s.ungated_fraction);
  }
  close_output(f, out);
  return 0;
}

int cmd_identities(const GlobalOptions& g, const std::string& out) {
  const TimeSeries x = load_input(g);
  validate(x);
  const Boundary mode = g.cyclic ? Boundary::cyclic : Boundary::linear;
  const std::size_t lo = std::max<std::size_t>(1, to_samples(g.delay_min, g));
  std::size_t hi = to_samples(g.delay_max, g);
  const std::size_t cap = x.size() >= 3 ? (x.size() - 1) / 2 : 0;
  if (hi > cap) hi = cap;
  if (lo > hi) throw DomainError("empty delay range");

  std::string err;
  FILE* f = open_output(out, err);
  if (!f) throw IoError(err);
  std::fprintf(f, "d,leg1,leg2,epsilon,beta_pair,beta_double,bound_leg,bound_epsilon,"
                  "bound_beta_pair,tie_slack\n");
  for (std::size_t d = lo; d <= hi; ++d) {
    const IdentityReport r = check_identities(x, d, mode);
    std::fprintf(f, "%zu,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", d, r.leg1, r.leg2,
                 r.epsilon, r.beta_pair, r.beta_double, r.bound_leg, r.bound_epsilon,
                 r.bound_beta_pair, r.tie_slack);
  }
  close_output(f, out);
  return 0;
}

int cmd_mediantest(const GlobalOptions& g, const std::string& sided_name) {
  const TimeSeries x = load_input(g);
  std::vector<double> signs;
  std::size_t dropped = 0;
  for (const double v : x.values) {
    if (is_missing(v) || v == 0.0) {
      ++dropped;
    } else {
      signs.push_back(v);
    }
  }
  if (signs.empty()) {
    throw DegenerateDataError("no nonzero values to test");
  }
  const Sided sided = sided_name == "two" ? Sided::two : Sided::one;
  const MedianTestResult r = median_test(signs, sided);
  std::printf("positives,%llu\ntrials,%llu\ndropped,%zu\nsided,%s\np_value,%.12g\n",
              static_cast<unsigned long long>(r.positives),
              static_cast<unsigned long long>(r.trials), dropped, sided_name.c_str(),
              r.p_value);
  return 0;
}

struct SimulateOptions {
  std::string kind = "white";
  std::size_t length = 10000;
  std::uint64_t seed = 1;
  double noise_std = 1.0;
  double a1 = 1.85;
  double a2 = -0.96;
  std::size_t period = 100;
  std::string waveform = "sine";
  double amplitude = 1.0;
  std::string disturb_kind = "none";
  double snr = 1.0;
  double fraction = 0.01;
  double outlier_sigmas = 20.0;
  double period_scale = 300.0;
  double transform_scale = 7.0;
  std::uint64_t disturb_seed = 0;
  std::string out;
};

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& s) {
  GeneratorSpec spec;
  if (s.kind == "white") {
    spec.kind = ProcessKind::white_noise;
  } else if (s.kind == "ar2") {
    spec.kind = ProcessKind::ar2;
  } else if (s.kind == "brownian") {
    spec.kind = ProcessKind::brownian;
  } else if (s.kind == "periodic") {
    spec.kind = ProcessKind::periodic;
  } else {
    throw DomainError("unknown process '" + s.kind + "' (white, ar2, brownian, periodic)");
  }
  spec.length = s.length;
  spec.seed = s.seed;
  spec.noise_std = s.noise_std;
  spec.a1 = s.a1;
  spec.a2 = s.a2;
  spec.period = s.period;
  spec.amplitude = s.amplitude;
  if (s.waveform == "sine") {
    spec.waveform = Waveform::sine;
  } else if (s.waveform == "triangle") {
    spec.waveform = Waveform::triangle;
  } else if (s.waveform == "square") {
    spec.waveform = Waveform::square;
  } else {
    throw DomainError("unknown waveform '" + s.waveform + "'");
  }

  TimeSeries x = generate(spec);

  if (s.disturb_kind != "none") {
    DisturbanceSpec d;
    d.seed = s.disturb_seed;
    d.snr = s.snr;
    d.fraction = s.fraction;
    d.amplitude_sigmas = s.outlier_sigmas;
    d.period_scale = s.period_scale;
    d.transform_scale = s.transform_scale;
    if (s.disturb_kind == "noise") {
      d.kind = DisturbanceKind::additive_white_noise;
    } else if (s.disturb_kind == "outliers") {
      d.kind = DisturbanceKind::outliers;
    } else if (s.disturb_kind == "lowfreq") {
      d.kind = DisturbanceKind::low_freq;
    } else if (s.disturb_kind == "exp") {
      d.kind = DisturbanceKind::monotone_transform;
    } else {
      throw DomainError("unknown disturbance '" + s.disturb_kind +
                        "' (none, noise, outliers, lowfreq, exp)");
    }
    x = disturb(x, d);
  }

  if (g.format == "raw") {
    save_series_raw(x, s.out);
  } else {
    save_series_csv(x, s.out);
  }
  std::fprintf(stderr, "simulate: wrote %zu values to %s\n", x.size(), s.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal pattern statistics for long, dirty time series"};
  app.require_subcommand(1);
  app.set_config("--config");

  GlobalOptions g;
  app.add_option("--threads", g.threads, "worker threads (default: ORDINAL_SCAN_THREADS or all cores)");

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    sub->fallthrough();  // let --config/--threads appear after the subcommand
    if (needs_input) {
      sub->add_option("--input,-i", g.input, "input series file")->required();
      sub->add_option("--format", g.format, "series format: csv, csv2, raw");
      sub->add_option("--missing-token", g.missing_token, "text marking a missing value");
      sub->add_flag("--cumsum", g.cumsum, "analyze running sums of the input");
      sub->add_option("--cumsum-policy", g.cumsum_policy,
                      "missing handling for --cumsum: propagate, skip-missing");
    }
    sub->add_option("--hz", g.hz,
                    "sampling rate; delay/window/step/band options are then in seconds");
  };
  const auto add_delays = [&](CLI::App* sub) {
    sub->add_option("--delay-min", g.delay_min, "smallest delay");
    sub->add_option("--delay-max", g.delay_max, "largest delay");
    sub->add_flag("--cyclic", g.cyclic, "wrap indices modulo the length (exact identities)");
  };
  const auto add_windows = [&](CLI::App* sub) {
    sub->add_option("--window", g.window, "window length");
    sub->add_option("--step", g.step, "window step (default: the window length)");
    sub->add_option("--gate", g.gate, "delta_sq gate threshold (default 15/window)");
  };

  std::string out;
  std::string stat = "tau";
  std::string map_format = "csv";
  double range_lo = 0, range_hi = 0;
  double band_min = 2, band_max = 20;
  std::string prefix = "partition";
  std::string sided = "one";
  SimulateOptions sim;

  CLI::App* profile = app.add_subcommand("profile", "ordinal functions over a delay range");
  add_common(profile, true);
  add_delays(profile);
  profile->add_option("--out,-o", out, "output CSV (default stdout)");

  CLI::App* map = app.add_subcommand("map", "sliding-window map of one statistic");
  add_common(map, true);
  add_delays(map);
  add_windows(map);
  map->add_option("--stat", stat, "beta, beta_pair, tau, gamma, delta, epsilon, delta_sq, "
                                  "entropy, divergence, rho, tau_tilde, beta_tilde, "
                                  "gamma_tilde, delta_tilde");
  map->add_option("--out,-o", out, "output file")->required();
  map->add_option("--map-format", map_format, "csv or pgm");
  map->add_option("--range-lo", range_lo, "pgm pixel scale low end");
  map->add_option("--range-hi", range_hi, "pgm pixel scale high end");

  CLI::App* partition = app.add_subcommand("partition",
                                           "four delta_sq component maps plus averages");
  add_common(partition, true);
  add_delays(partition);
  add_windows(partition);
  partition->add_option("--out-prefix", prefix, "output file prefix");
  partition->add_option("--map-format", map_format, "csv or pgm");

  CLI::App* summary = app.add_subcommand("summary", "per-window amplitude and delta_sq band mean");
  add_common(summary, true);
  add_delays(summary);
  add_windows(summary);
  summary->add_option("--band-min", band_min, "band: smallest delay");
  summary->add_option("--band-max", band_max, "band: largest delay");
  summary->add_option("--out,-o", out, "output CSV (default stdout)");

  CLI::App* identities = app.add_subcommand("identities", "pattern-frequency identity report");
  add_common(identities, true);
  add_delays(identities);
  identities->add_option("--out,-o", out, "output CSV (default stdout)");

  CLI::App* mediantest = app.add_subcommand("mediantest",
                                            "exact sign test on per-window values");
  add_common(mediantest, true);
  mediantest->add_option("--sided", sided, "one or two");

  CLI::App* simulate = app.add_subcommand("simulate", "write a synthetic series");
  add_common(simulate, false);
  simulate->add_option("--kind", sim.kind, "white, ar2, brownian, periodic");
  simulate->add_option("--length", sim.length, "number of samples");
  simulate->add_option("--seed", sim.seed, "generator seed");
  simulate->add_option("--noise-std", sim.noise_std, "innovation standard deviation");
  simulate->add_option("--a1", sim.a1, "AR2 coefficient a1");
  simulate->add_option("--a2", sim.a2, "AR2 coefficient a2");
  simulate->add_option("--period", sim.period, "periodic: period in samples");
  simulate->add_option("--waveform", sim.waveform, "sine, triangle, square");
  simulate->add_option("--amplitude", sim.amplitude, "periodic: amplitude");
  simulate->add_option("--disturb", sim.disturb_kind, "none, noise, outliers, lowfreq, exp");
  simulate->add_option("--snr", sim.snr, "noise: signal-to-noise variance ratio");
  simulate->add_option("--fraction", sim.fraction, "outliers: fraction of positions");
  simulate->add_option("--outlier-sigmas", sim.outlier_sigmas, "outliers: amplitude in sigmas");
  simulate->add_option("--period-scale", sim.period_scale, "lowfreq: adds sin(t/scale)");
  simulate->add_option("--transform-scale", sim.transform_scale, "exp: y = exp(x/scale)");
  simulate->add_option("--disturb-seed", sim.disturb_seed, "disturbance seed");
  simulate->add_option("--seriesformat", g.format, "output format: csv or raw");
  simulate->add_option("--out,-o", sim.out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  try {
    if (app.got_subcommand(profile)) return cmd_profile(g, out);
    if (app.got_subcommand(map)) return cmd_map(g, stat, out, map_format, range_lo, range_hi);
    if (app.got_subcommand(partition)) return cmd_partition(g, prefix, map_format);
    if (app.got_subcommand(summary)) return cmd_summary(g, band_min, band_max, out);
    if (app.got_subcommand(identities)) return cmd_identities(g, out);
    if (app.got_subcommand(mediantest)) return cmd_mediantest(g, sided);
    if (app.got_subcommand(simulate)) return cmd_simulate(g, sim);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // data error
  }
  return 0;
}
