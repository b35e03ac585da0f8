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

#include "ordinalscan/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

namespace {

constexpr double kLog6 = 1.791759469228055000812477358380702272722990692183004705855374;

// Kahan-compensated accumulator for the order-n sums, where a histogram can
// hold 5040 buckets fed by 1e7+ counts.
struct Kahan {
  double sum = 0;
  double carry = 0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double beta_pairwise(const PairCounts& c) {
  const std::uint64_t total = c.n12 + c.n21;
  if (total == 0) {
    throw DegenerateDataError("all pairs excluded at delay " + std::to_string(c.d));
  }
  const double p12 = static_cast<double>(c.n12) / static_cast<double>(total);
  return 2.0 * p12 - 1.0;
}

OrdinalValues ordinal_values(const PatternFrequencies& f) {
  OrdinalValues v;
  v.p = f.p;
  v.d = f.d;
  v.valid = f.valid;

  const auto& p = f.p;
  v.beta = p[pat123] - p[pat321];
  v.tau = (p[pat123] + p[pat321]) - 1.0 / 3.0;
  v.gamma = (p[pat213] + p[pat231]) - (p[pat132] + p[pat312]);
  v.delta = (p[pat132] + p[pat213]) - (p[pat231] + p[pat312]);
  v.epsilon = (p[pat231] + p[pat132]) - (p[pat213] + p[pat312]);

  double dsq = 0;
  double h = 0;
  for (std::size_t i = 0; i < kPatternCount3; ++i) {
    const double q = p[i] - 1.0 / 6.0;
    dsq += q * q;
    if (p[i] > 0) h -= p[i] * std::log(p[i]);
  }
  v.delta_sq = dsq;
  v.entropy = h;
  v.divergence = std::max(0.0, kLog6 - h);
  return v;
}

PartitionComponents partition(const OrdinalValues& v, double gate_threshold) {
  if (gate_threshold < 0) {
    throw DomainError("gate threshold must be nonnegative");
  }
  PartitionComponents out;
  for (std::size_t i = 0; i < kPatternCount3; ++i) {
    out.q[i] = v.p[i] - 1.0 / 6.0;
  }
  if (v.delta_sq < gate_threshold) {
    out.gated = true;
    out.tau_tilde = out.beta_tilde = out.gamma_tilde = out.delta_tilde =
        out.residual = missing_value();
    return out;
  }
  if (v.delta_sq == 0.0) {
    throw DomainError("partition undefined: delta_sq is zero and ungated");
  }
  const double denom = 4.0 * v.delta_sq;
  out.tau_tilde = 3.0 * v.tau * v.tau / denom;
  out.beta_tilde = 2.0 * v.beta * v.beta / denom;
  out.gamma_tilde = v.gamma * v.gamma / denom;
  out.delta_tilde = v.delta * v.delta / denom;
  out.residual = v.epsilon * v.epsilon / denom;
  return out;
}

double taylor_entropy_approx(double delta_sq) {
  return kLog6 - 3.0 * delta_sq;
}

EntropyStats entropy_n(const OrderNHistogram& h) {
  if (h.valid == 0) {
    throw DegenerateDataError("no valid windows at delay " + std::to_string(h.d));
  }
  const double total = static_cast<double>(h.valid);
  const double uniform = 1.0 / static_cast<double>(h.counts.size());
  const double log_nfact = std::log(static_cast<double>(h.counts.size()));

  Kahan entropy;
  Kahan dsq;
  for (const auto c : h.counts) {
    const double p = static_cast<double>(c) / total;
    const double q = p - uniform;
    dsq.add(q * q);
    if (p > 0) entropy.add(-p * std::log(p));
  }

  EntropyStats out;
  out.entropy = entropy.sum;
  out.divergence = std::max(0.0, log_nfact - entropy.sum);
  out.delta_sq = dsq.sum;
  return out;
}

double autocorr(std::span<const double> x, std::size_t d) {
  const std::size_t T = x.size();
  if (d < 1 || T < 2 || d > T - 1) {
    throw DomainError("delay " + std::to_string(d) + " out of range for autocorrelation");
  }

  // Pairwise-complete Pearson correlation of (x_t, x_{t+d}).
  std::size_t n = 0;
  double mean_a = 0, mean_b = 0;
  for (std::size_t t = 0; t + d < T; ++t) {
    const double a = x[t];
    const double b = x[t + d];
    if (std::isnan(a) || std::isnan(b)) continue;
    ++n;
    mean_a += a;
    mean_b += b;
  }
  if (n < 2) return missing_value();
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double saa = 0, sbb = 0, sab = 0;
  for (std::size_t t = 0; t + d < T; ++t) {
    const double a = x[t];
    const double b = x[t + d];
    if (std::isnan(a) || std::isnan(b)) continue;
    const double da = a - mean_a;
    const double db = b - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa <= 0 || sbb <= 0) return missing_value();
  return sab / std::sqrt(saa * sbb);
}

double autocorr(const TimeSeries& x, std::size_t d) {
  return autocorr(std::span<const double>(x.values), d);
}

IdentityReport check_identities(const TimeSeries& x, std::size_t d, Boundary mode) {
  const std::size_t T = x.size();
  // Triples at delay d and pairs at lag 2d both need T >= 2d+1.
  if (mode == Boundary::linear && (d < 1 || T < 2 * d + 1)) {
    throw DomainError("identities need both d and 2d in range (T >= 2d+1)");
  }

  const PairCounts pairs_d = count_pairs(x, d, mode);
  const PairCounts pairs_2d = count_pairs(x, 2 * d, mode);
  const PatternHistogram hist = count_patterns3(x, d, mode);
  const PatternFrequencies f = to_frequencies(hist);
  const OrdinalValues v = ordinal_values(f);

  const std::uint64_t pair_total = pairs_d.n12 + pairs_d.n21;
  const std::uint64_t pair2_total = pairs_2d.n12 + pairs_2d.n21;
  if (pair_total == 0 || pair2_total == 0) {
    throw DegenerateDataError("all pairs excluded; identities undefined");
  }
  const double p12 = static_cast<double>(pairs_d.n12) / static_cast<double>(pair_total);
  const double p12_2d = static_cast<double>(pairs_2d.n12) / static_cast<double>(pair2_total);

  IdentityReport r;
  r.d = d;
  r.mode = mode;
  r.leg1 = p12 - (f.p[pat123] + f.p[pat132] + f.p[pat231]);
  r.leg2 = p12 - (f.p[pat123] + f.p[pat213] + f.p[pat312]);
  r.epsilon = v.epsilon;
  r.beta_pair = (2.0 * p12 - 1.0) - v.beta;
  r.beta_double = (2.0 * p12_2d - 1.0) - (v.beta + v.delta);

  if (mode == Boundary::linear) {
    const double Td = static_cast<double>(T - d);
    const double T2d = static_cast<double>(T - 2 * d);
    r.bound_leg = static_cast<double>(d) / Td;
    r.bound_epsilon = static_cast<double>(d) / T2d;
    r.bound_beta_pair = 2.0 * static_cast<double>(d) / Td;
  }

  const double pair_excl =
      static_cast<double>(pairs_d.excluded) / static_cast<double>(pair_total);
  const double pair2_excl =
      static_cast<double>(pairs_2d.excluded) / static_cast<double>(pair2_total);
  const double triple_excl =
      static_cast<double>(hist.excluded_ties + hist.excluded_missing) /
      static_cast<double>(hist.valid);
  r.tie_slack = pair_excl + pair2_excl + triple_excl;
  return r;
}

}  // namespace ordinalscan
