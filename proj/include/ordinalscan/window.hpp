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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordinalscan/ordinal.hpp"
#include "ordinalscan/time_series.hpp"

namespace ordinalscan {

/// Statistic evaluated per (window, delay) cell.
enum class Stat {
  beta,       // triple-based p123 - p321
  beta_pair,  // pairwise up-down balance
  tau,
  gamma,
  delta,
  epsilon,
  delta_sq,
  entropy,
  divergence,
  rho,         // Pearson autocorrelation
  tau_tilde,   // partition components; undefined below the gate
  beta_tilde,
  gamma_tilde,
  delta_tilde,
};

const char* stat_name(Stat s);

/// Throws DomainError for an unknown name.
Stat stat_from_name(const std::string& name);

/// Sliding-window layout plus the statistical gate. Windows shorter than
/// window_length at the tail are dropped, never padded.
struct WindowPlan {
  std::size_t window_length = 0;        // n
  std::size_t step = 0;
  std::vector<std::size_t> delays;      // strictly increasing, >= 1
  Boundary mode = Boundary::linear;
  double gate_threshold = -1.0;         // < 0 means the default 15/n

  double gate() const {
    return gate_threshold < 0 ? 15.0 / static_cast<double>(window_length)
                              : gate_threshold;
  }
};

/// Throws DomainError unless the plan admits at least one full window of x
/// and every delay fits the window (max delay <= (n-1)/2, n >= 3, step >= 1).
void validate(const WindowPlan& plan, std::size_t series_length);

std::size_t window_count(const WindowPlan& plan, std::size_t series_length);

/// Gated (delay x window) matrix of one statistic. Row r is delays[r],
/// column w is the window starting at window_starts[w]. Masked cells hold
/// NaN; a cell is masked when its statistic is undefined (no valid
/// triples, zero variance, gated partition) or when the window's delta_sq
/// at that delay falls below the plan's gate.
struct WindowMap {
  std::vector<double> values;  // row-major, rows() x cols()
  std::vector<std::uint8_t> mask;
  std::string stat;
  WindowPlan plan;
  std::vector<std::size_t> window_starts;

  std::size_t rows() const { return plan.delays.size(); }
  std::size_t cols() const { return window_starts.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
  bool masked(std::size_t row, std::size_t col) const { return mask[row * cols() + col] != 0; }
};

WindowMap run_map(const TimeSeries& x, const WindowPlan& plan, Stat stat,
                  unsigned threads = 0);

/// The four partition components over one shared gate mask, plus their
/// averages over ungated cells (mean of per-cell ratios) and the mean
/// residual. gated_fraction counts masked cells among all cells.
struct PartitionMaps {
  WindowMap tau_tilde;
  WindowMap beta_tilde;
  WindowMap gamma_tilde;
  WindowMap delta_tilde;
  double avg_tau_tilde = 0;
  double avg_beta_tilde = 0;
  double avg_gamma_tilde = 0;
  double avg_delta_tilde = 0;
  double mean_residual = 0;
  double gated_fraction = 0;
};

PartitionMaps run_partition_map(const TimeSeries& x, const WindowPlan& plan,
                                unsigned threads = 0);

/// Per-window scalars: mean |x| over present samples, mean delta_sq over a
/// delay band (gated or not; NaN when no band cell has valid triples), and
/// the fraction of band cells at or above the gate.
struct WindowSummary {
  std::size_t start = 0;
  double mean_abs_amplitude = 0;
  double mean_delta_sq = 0;
  double ungated_fraction = 0;
};

/// band_min..band_max select the plan delays inside the band; the selection
/// must be nonempty.
std::vector<WindowSummary> run_summary(const TimeSeries& x, const WindowPlan& plan,
                                       std::size_t band_min, std::size_t band_max,
                                       unsigned threads = 0);

}  // namespace ordinalscan
