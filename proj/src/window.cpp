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

#include "ordinalscan/window.hpp"

#include <cmath>
#include <span>
#include <string>

#include "ordinalscan/errors.hpp"
#include "ordinalscan/parallel.hpp"
#include "ordinalscan/patterns.hpp"

namespace ordinalscan {

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::beta: return "beta";
    case Stat::beta_pair: return "beta_pair";
    case Stat::tau: return "tau";
    case Stat::gamma: return "gamma";
    case Stat::delta: return "delta";
    case Stat::epsilon: return "epsilon";
    case Stat::delta_sq: return "delta_sq";
    case Stat::entropy: return "entropy";
    case Stat::divergence: return "divergence";
    case Stat::rho: return "rho";
    case Stat::tau_tilde: return "tau_tilde";
    case Stat::beta_tilde: return "beta_tilde";
    case Stat::gamma_tilde: return "gamma_tilde";
    case Stat::delta_tilde: return "delta_tilde";
  }
  return "unknown";
}

Stat stat_from_name(const std::string& name) {
  for (const Stat s :
       {Stat::beta, Stat::beta_pair, Stat::tau, Stat::gamma, Stat::delta, Stat::epsilon,
        Stat::delta_sq, Stat::entropy, Stat::divergence, Stat::rho, Stat::tau_tilde,
        Stat::beta_tilde, Stat::gamma_tilde, Stat::delta_tilde}) {
    if (name == stat_name(s)) return s;
  }
  throw DomainError("unknown statistic '" + name + "'");
}

void validate(const WindowPlan& plan, std::size_t series_length) {
  if (plan.window_length < 3) {
    throw DomainError("window length must be at least 3");
  }
  if (plan.step < 1) {
    throw DomainError("window step must be at least 1");
  }
  if (plan.delays.empty()) {
    throw DomainError("delay grid must not be empty");
  }
  std::size_t prev = 0;
  for (const std::size_t d : plan.delays) {
    if (d < 1 || d <= prev) {
      throw DomainError("delay grid must be strictly increasing and positive");
    }
    prev = d;
  }
  if (plan.delays.back() > (plan.window_length - 1) / 2) {
    throw DomainError("max delay " + std::to_string(plan.delays.back()) +
                      " exceeds (window-1)/2 = " +
                      std::to_string((plan.window_length - 1) / 2));
  }
  if (series_length < plan.window_length) {
    throw DomainError("series shorter than one window");
  }
  if (plan.gate_threshold >= 0 && !std::isfinite(plan.gate_threshold)) {
    throw DomainError("gate threshold must be finite");
  }
}

std::size_t window_count(const WindowPlan& plan, std::size_t series_length) {
  return (series_length - plan.window_length) / plan.step + 1;
}

namespace {

struct CellResult {
  double value = 0;
  double delta_sq = 0;  // NaN when no valid triples
  bool defined = false;
};

CellResult eval_cell(std::span<const double> window, std::size_t d, Boundary mode,
                     Stat stat, double gate) {
  CellResult cell;
  const PatternHistogram h = count_patterns3(window, d, mode);
  if (h.valid == 0) {
    cell.delta_sq = missing_value();
    return cell;
  }
  const OrdinalValues v = ordinal_values(to_frequencies(h));
  cell.delta_sq = v.delta_sq;

  switch (stat) {
    case Stat::beta: cell.value = v.beta; break;
    case Stat::tau: cell.value = v.tau; break;
    case Stat::gamma: cell.value = v.gamma; break;
    case Stat::delta: cell.value = v.delta; break;
    case Stat::epsilon: cell.value = v.epsilon; break;
    case Stat::delta_sq: cell.value = v.delta_sq; break;
    case Stat::entropy: cell.value = v.entropy; break;
    case Stat::divergence: cell.value = v.divergence; break;
    case Stat::beta_pair: {
      const PairCounts c = count_pairs(window, d, mode);
      if (c.n12 + c.n21 == 0) return cell;
      cell.value = beta_pairwise(c);
      break;
    }
    case Stat::rho: {
      const double r = autocorr(window, d);
      if (std::isnan(r)) return cell;
      cell.value = r;
      break;
    }
    case Stat::tau_tilde:
    case Stat::beta_tilde:
    case Stat::gamma_tilde:
    case Stat::delta_tilde: {
      if (v.delta_sq < gate || v.delta_sq == 0.0) return cell;  // gated/undefined
      const PartitionComponents parts = partition(v, gate);
      switch (stat) {
        case Stat::tau_tilde: cell.value = parts.tau_tilde; break;
        case Stat::beta_tilde: cell.value = parts.beta_tilde; break;
        case Stat::gamma_tilde: cell.value = parts.gamma_tilde; break;
        case Stat::delta_tilde: cell.value = parts.delta_tilde; break;
        default: break;
      }
      break;
    }
  }
  cell.defined = true;
  return cell;
}

WindowMap make_empty_map(const WindowPlan& plan, Stat stat, std::size_t T) {
  WindowMap m;
  m.plan = plan;
  m.stat = stat_name(stat);
  const std::size_t windows = window_count(plan, T);
  m.window_starts.resize(windows);
  for (std::size_t w = 0; w < windows; ++w) m.window_starts[w] = w * plan.step;
  m.values.assign(plan.delays.size() * windows, missing_value());
  m.mask.assign(plan.delays.size() * windows, 1);
  return m;
}

}  // namespace

WindowMap run_map(const TimeSeries& x, const WindowPlan& plan, Stat stat,
                  unsigned threads) {
  validate(plan, x.size());
  WindowMap map = make_empty_map(plan, stat, x.size());
  const std::size_t cols = map.cols();
  const double gate = plan.gate();
  const std::span<const double> all(x.values);

  parallel_for(0, cols, threads, [&](std::size_t w) {
    const auto window = all.subspan(map.window_starts[w], plan.window_length);
    for (std::size_t r = 0; r < plan.delays.size(); ++r) {
      const CellResult cell = eval_cell(window, plan.delays[r], plan.mode, stat, gate);
      const bool gated = !(cell.delta_sq >= gate);  // true also when delta_sq is NaN
      const std::size_t at = r * cols + w;
      if (cell.defined && !gated) {
        map.values[at] = cell.value;
        map.mask[at] = 0;
      }
    }
  });
  return map;
}

PartitionMaps run_partition_map(const TimeSeries& x, const WindowPlan& plan,
                                unsigned threads) {
  validate(plan, x.size());
  PartitionMaps out;
  out.tau_tilde = make_empty_map(plan, Stat::tau_tilde, x.size());
  out.beta_tilde = make_empty_map(plan, Stat::beta_tilde, x.size());
  out.gamma_tilde = make_empty_map(plan, Stat::gamma_tilde, x.size());
  out.delta_tilde = make_empty_map(plan, Stat::delta_tilde, x.size());

  const std::size_t cols = out.tau_tilde.cols();
  const std::size_t rows = plan.delays.size();
  const double gate = plan.gate();
  const std::span<const double> all(x.values);
  std::vector<double> residuals(rows * cols, missing_value());

  parallel_for(0, cols, threads, [&](std::size_t w) {
    const auto window = all.subspan(w * plan.step, plan.window_length);
    for (std::size_t r = 0; r < rows; ++r) {
      const PatternHistogram h = count_patterns3(window, plan.delays[r], plan.mode);
      if (h.valid == 0) continue;
      const OrdinalValues v = ordinal_values(to_frequencies(h));
      if (v.delta_sq < gate || v.delta_sq == 0.0) continue;
      const PartitionComponents parts = partition(v, gate);
      const std::size_t at = r * cols + w;
      out.tau_tilde.values[at] = parts.tau_tilde;
      out.beta_tilde.values[at] = parts.beta_tilde;
      out.gamma_tilde.values[at] = parts.gamma_tilde;
      out.delta_tilde.values[at] = parts.delta_tilde;
      residuals[at] = parts.residual;
      out.tau_tilde.mask[at] = 0;
      out.beta_tilde.mask[at] = 0;
      out.gamma_tilde.mask[at] = 0;
      out.delta_tilde.mask[at] = 0;
    }
  });

  std::size_t ungated = 0;
  double sum_tau = 0, sum_beta = 0, sum_gamma = 0, sum_delta = 0, sum_res = 0;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    if (out.tau_tilde.mask[i]) continue;
    ++ungated;
    sum_tau += out.tau_tilde.values[i];
    sum_beta += out.beta_tilde.values[i];
    sum_gamma += out.gamma_tilde.values[i];
    sum_delta += out.delta_tilde.values[i];
    sum_res += residuals[i];
  }
  const std::size_t total = rows * cols;
  out.gated_fraction =
      total == 0 ? 0.0 : static_cast<double>(total - ungated) / static_cast<double>(total);
  if (ungated > 0) {
    const double n = static_cast<double>(ungated);
    out.avg_tau_tilde = sum_tau / n;
    out.avg_beta_tilde = sum_beta / n;
    out.avg_gamma_tilde = sum_gamma / n;
    out.avg_delta_tilde = sum_delta / n;
    out.mean_residual = sum_res / n;
  } else {
    out.avg_tau_tilde = out.avg_beta_tilde = out.avg_gamma_tilde = out.avg_delta_tilde =
        out.mean_residual = missing_value();
  }
  return out;
}

std::vector<WindowSummary> run_summary(const TimeSeries& x, const WindowPlan& plan,
                                       std::size_t band_min, std::size_t band_max,
                                       unsigned threads) {
  validate(plan, x.size());
  std::vector<std::size_t> band;
  for (const std::size_t d : plan.delays) {
    if (d >= band_min && d <= band_max) band.push_back(d);
  }
  if (band.empty()) {
    throw DomainError("delay band selects no delays from the plan grid");
  }

  const std::size_t windows = window_count(plan, x.size());
  const double gate = plan.gate();
  std::vector<WindowSummary> out(windows);
  const std::span<const double> all(x.values);

  parallel_for(0, windows, threads, [&](std::size_t w) {
    const std::size_t start = w * plan.step;
    const auto window = all.subspan(start, plan.window_length);

    WindowSummary s;
    s.start = start;

    std::size_t present = 0;
    double abs_sum = 0;
    for (const double v : window) {
      if (!is_missing(v)) {
        ++present;
        abs_sum += std::abs(v);
      }
    }
    s.mean_abs_amplitude =
        present > 0 ? abs_sum / static_cast<double>(present) : missing_value();

    std::size_t evaluated = 0;
    std::size_t ungated = 0;
    double dsq_sum = 0;
    for (const std::size_t d : band) {
      const PatternHistogram h = count_patterns3(window, d, plan.mode);
      if (h.valid == 0) continue;
      const OrdinalValues v = ordinal_values(to_frequencies(h));
      ++evaluated;
      dsq_sum += v.delta_sq;
      if (v.delta_sq >= gate) ++ungated;
    }
    s.mean_delta_sq =
        evaluated > 0 ? dsq_sum / static_cast<double>(evaluated) : missing_value();
    s.ungated_fraction = static_cast<double>(ungated) / static_cast<double>(band.size());
    out[w] = s;
  });
  return out;
}

}  // namespace ordinalscan
