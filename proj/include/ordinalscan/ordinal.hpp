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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "ordinalscan/patterns.hpp"
#include "ordinalscan/time_series.hpp"

namespace ordinalscan {

/// All scalar functions of one length-3 pattern distribution. Natural
/// logarithm throughout, with the convention 0*log 0 = 0.
///
///   beta     = p123 - p321                       up-down balance, [-1, 1]
///   tau      = p123 + p321 - 1/3                 persistence, [-1/3, 2/3]
///   gamma    = p213 + p231 - p132 - p312         time irreversibility
///   delta    = p132 + p213 - p231 - p312         up-down scaling
///   epsilon  = p231 + p132 - p213 - p312         local maxima minus minima
///   delta_sq = sum (p - 1/6)^2                   distance to white noise, [0, 5/6]
///   entropy  = -sum p log p                      [0, log 6]
///   divergence = log 6 - entropy
struct OrdinalValues {
  double beta = 0;
  double tau = 0;
  double gamma = 0;
  double delta = 0;
  double epsilon = 0;
  double delta_sq = 0;
  double entropy = 0;
  double divergence = 0;
  std::array<double, kPatternCount3> p{};  // the frequencies these came from
  std::size_t d = 1;
  std::uint64_t valid = 0;
};

/// Normalized split of delta_sq:
///
///   4*delta_sq = 3*tau^2 + 2*beta^2 + gamma^2 + delta^2 + epsilon^2
///
/// holds for any six frequencies summing to 1, so the four components plus
/// the residual epsilon^2/(4 delta_sq) sum to exactly 1. When delta_sq is
/// below the gate threshold the split is statistically meaningless:
/// gated is set and the components are NaN.
struct PartitionComponents {
  double tau_tilde = 0;    // 3 tau^2 / (4 delta_sq)
  double beta_tilde = 0;   // beta^2 / (2 delta_sq)
  double gamma_tilde = 0;  // gamma^2 / (4 delta_sq)
  double delta_tilde = 0;  // delta^2 / (4 delta_sq)
  double residual = 0;     // epsilon^2 / (4 delta_sq)
  std::array<double, kPatternCount3> q{};  // centered frequencies p - 1/6
  bool gated = false;
};

/// Entropy statistics of an order-n histogram, with uniform reference 1/n!.
struct EntropyStats {
  double entropy = 0;     // [0, log n!]
  double divergence = 0;  // log n! - entropy
  double delta_sq = 0;    // sum (p - 1/n!)^2
};

/// Signed discrepancies of the pattern-frequency identities at delay d,
/// together with their worst-case boundary bounds (tie-free series). In
/// cyclic mode every identity is exact and all bounds are zero.
///
/// With p12 = n12/(n12+n21) from pair counting:
///   leg1        p12 - (p123 + p132 + p231)     bound d/(T-d)
///   leg2        p12 - (p123 + p213 + p312)     bound d/(T-d)
///   epsilon     p231 + p132 - p213 - p312      bound d/(T-2d)
///   beta_pair   (p12 - p21) - (p123 - p321)    bound 2d/(T-d)
///   beta_double (2*p12(2d) - 1) - (beta(d) + delta(d))   exact, bound 0
///
/// tie_slack reports the extra allowance when exclusions occurred: the
/// excluded fractions of the pair and triple position sets. The bounds
/// above assume it is zero.
struct IdentityReport {
  std::size_t d = 1;
  Boundary mode = Boundary::linear;
  double leg1 = 0;
  double leg2 = 0;
  double epsilon = 0;
  double beta_pair = 0;
  double beta_double = 0;
  double bound_leg = 0;
  double bound_epsilon = 0;
  double bound_beta_pair = 0;
  double tie_slack = 0;
};

/// Up-down balance from pair counts: p12 - p21 over the non-excluded pairs.
/// Throws DegenerateDataError when every pair was excluded.
double beta_pairwise(const PairCounts& c);

OrdinalValues ordinal_values(const PatternFrequencies& f);

/// Throws DomainError when delta_sq is exactly zero and the gate is zero
/// (nothing to normalize and no gate to hide behind).
PartitionComponents partition(const OrdinalValues& v, double gate_threshold);

/// Quadratic approximation of entropy near white noise: log 6 - 3*delta_sq.
/// Within ~1e-5 of the true entropy when all |p - 1/6| <= 0.01; off by
/// design far from uniform.
double taylor_entropy_approx(double delta_sq);

/// Throws DegenerateDataError on an empty histogram.
EntropyStats entropy_n(const OrderNHistogram& h);

/// Pearson autocorrelation at lag d over pairwise-complete observations.
/// Returns NaN (undefined) for zero variance or fewer than two complete
/// pairs; throws DomainError only for an out-of-range delay.
double autocorr(std::span<const double> x, std::size_t d);
double autocorr(const TimeSeries& x, std::size_t d);

/// Requires triples at delay d and pairs at lag 2d, i.e. T >= 2d+1 in
/// linear mode.
IdentityReport check_identities(const TimeSeries& x, std::size_t d,
                                Boundary mode = Boundary::linear);

}  // namespace ordinalscan
