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

#include "ordinalscan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

namespace {

// Tail sums of Binomial(trials, 1/2). Exact in unsigned __int128 for
// trials <= 64 (the row sums stay below 2^64), lgamma-based otherwise.
double binomial_upper_tail(std::uint64_t k, std::uint64_t trials) {
  if (k == 0) return 1.0;
  if (k > trials) return 0.0;
  if (trials <= 64) {
    unsigned __int128 tail = 0;
    unsigned __int128 binom = 1;  // C(trials, 0)
    for (std::uint64_t i = 0; i <= trials; ++i) {
      if (i >= k) tail += binom;
      if (i < trials) {
        binom = binom * (trials - i) / (i + 1);
      }
    }
    const long double scale = std::ldexp(1.0L, -static_cast<int>(trials));
    return static_cast<double>(static_cast<long double>(tail) * scale);
  }
  const long double ln2 = 0.693147180559945309417232121458176568L;
  const long double lnfact_n = std::lgamma(static_cast<long double>(trials) + 1);
  long double tail = 0;
  for (std::uint64_t i = k; i <= trials; ++i) {
    const long double lnp = lnfact_n - std::lgamma(static_cast<long double>(i) + 1) -
                            std::lgamma(static_cast<long double>(trials - i) + 1) -
                            static_cast<long double>(trials) * ln2;
    tail += std::exp(lnp);
  }
  return static_cast<double>(std::min(tail, 1.0L));
}

}  // namespace

ErrorModel estimate_c(std::span<const double> samples, std::size_t n) {
  if (samples.size() < 2) {
    throw DomainError("estimating c needs at least two window samples");
  }
  if (n < 1) {
    throw DomainError("window length must be positive");
  }
  double mean = 0;
  for (const double v : samples) mean += v;
  mean /= static_cast<double>(samples.size());
  double ss = 0;
  for (const double v : samples) {
    const double dv = v - mean;
    ss += dv * dv;
  }
  const double sd = std::sqrt(ss / static_cast<double>(samples.size() - 1));

  ErrorModel m;
  m.n = n;
  m.c = sd * std::sqrt(static_cast<double>(n));
  m.sigma = sd;
  m.block_length = std::pow(m.c, 2.0 / 3.0);
  return m;
}

std::size_t required_n(double target_halfwidth, double c) {
  if (!(target_halfwidth > 0)) {
    throw DomainError("target halfwidth must be positive");
  }
  if (!(c > 0)) {
    throw DomainError("c must be positive");
  }
  const double ratio = 2.0 * c / target_halfwidth;
  const double approx = ratio * ratio;
  if (approx >= 9.0e18) {
    throw DomainError("required window length overflows");
  }
  // Search around the floating estimate so the returned n is exactly the
  // smallest one satisfying 2*c/sqrt(n) <= halfwidth.
  std::size_t n = static_cast<std::size_t>(std::max(1.0, std::floor(approx) - 2.0));
  while (2.0 * c / std::sqrt(static_cast<double>(n)) > target_halfwidth) {
    ++n;
  }
  return n;
}

MedianTestResult median_test(std::uint64_t positives, std::uint64_t trials, Sided sided) {
  if (trials == 0) {
    throw DomainError("median test needs at least one trial");
  }
  if (positives > trials) {
    throw DomainError("positives exceed trials");
  }
  MedianTestResult r;
  r.positives = positives;
  r.trials = trials;
  r.sided = sided;
  const double upper = binomial_upper_tail(positives, trials);
  if (sided == Sided::one) {
    r.p_value = upper;
  } else {
    // lower tail P(X <= positives) = P(X >= trials - positives) by symmetry
    const double lower = binomial_upper_tail(trials - positives, trials);
    r.p_value = std::min(1.0, 2.0 * std::min(lower, upper));
  }
  return r;
}

MedianTestResult median_test(std::span<const double> signs, Sided sided) {
  if (signs.empty()) {
    throw DomainError("median test needs at least one sign");
  }
  std::uint64_t positives = 0;
  for (const double v : signs) {
    if (v == 0.0 || std::isnan(v)) {
      throw DomainError("median test input must be sign-valued; drop zeros first");
    }
    if (v > 0) ++positives;
  }
  return median_test(positives, signs.size(), sided);
}

DeltaSqNullBound delta_sq_null_bound(std::size_t n) {
  if (n < 3) {
    throw DomainError("window length must be at least 3");
  }
  DeltaSqNullBound b;
  b.sigma = 7.0 / static_cast<double>(n);
  b.gate = 15.0 / static_cast<double>(n);
  return b;
}

bool large_delay_warning(std::size_t d, std::size_t n) {
  return n > 0 && static_cast<double>(d) > 0.05 * static_cast<double>(n);
}

}  // namespace ordinalscan
