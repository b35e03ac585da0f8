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

#include "ordinalscan/patterns.hpp"

#include <cmath>
#include <string>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

namespace {

[[noreturn]] void throw_delay_error(std::size_t d, std::size_t limit, const char* what) {
  throw DomainError("delay " + std::to_string(d) + " out of range for " + what +
                    " (max " + std::to_string(limit) + ")");
}

}  // namespace

PairCounts count_pairs(std::span<const double> x, std::size_t d, Boundary mode) {
  const std::size_t T = x.size();
  PairCounts out;
  out.d = d;
  out.mode = mode;

  if (mode == Boundary::linear) {
    if (d < 1 || d > T - 1 || T < 2) {
      throw_delay_error(d, T > 0 ? T - 1 : 0, "linear pair counting");
    }
    for (std::size_t t = 0; t + d < T; ++t) {
      const double a = x[t];
      const double b = x[t + d];
      if (std::isnan(a) || std::isnan(b) || a == b) {
        ++out.excluded;
      } else if (a < b) {
        ++out.n12;
      } else {
        ++out.n21;
      }
    }
  } else {
    if (d < 1 || d > T) {
      throw_delay_error(d, T, "cyclic pair counting");
    }
    for (std::size_t t = 0; t < T; ++t) {
      std::size_t u = t + d;
      if (u >= T) u -= T;
      const double a = x[t];
      const double b = x[u];
      if (std::isnan(a) || std::isnan(b) || a == b) {
        ++out.excluded;
      } else if (a < b) {
        ++out.n12;
      } else {
        ++out.n21;
      }
    }
  }
  return out;
}

PairCounts count_pairs(const TimeSeries& x, std::size_t d, Boundary mode) {
  return count_pairs(std::span<const double>(x.values), d, mode);
}

PatternHistogram count_patterns3(std::span<const double> x, std::size_t d, Boundary mode) {
  const std::size_t T = x.size();
  PatternHistogram out;
  out.d = d;
  out.mode = mode;

  if (mode == Boundary::linear) {
    if (d < 1 || T < 2 * d + 1) {
      throw_delay_error(d, T >= 3 ? (T - 1) / 2 : 0, "linear triple counting");
    }
    const double* p = x.data();
    const std::size_t m = T - 2 * d;
    for (std::size_t t = 0; t < m; ++t) {
      const double a = p[t];
      const double b = p[t + d];
      const double c = p[t + 2 * d];
      if (std::isnan(a) || std::isnan(b) || std::isnan(c)) {
        ++out.excluded_missing;
      } else if (a == b || a == c || b == c) {
        ++out.excluded_ties;
      } else {
        const int s = 2 * ((a > b) + (a > c)) + (b > c);
        ++out.counts[static_cast<std::size_t>(s)];
      }
    }
  } else {
    if (d < 1) {
      throw DomainError("delay must be positive");
    }
    for (std::size_t t = 0; t < T; ++t) {
      const double a = x[t];
      const double b = x[(t + d) % T];
      const double c = x[(t + 2 * d) % T];
      if (std::isnan(a) || std::isnan(b) || std::isnan(c)) {
        ++out.excluded_missing;
      } else if (a == b || a == c || b == c) {
        ++out.excluded_ties;
      } else {
        const int s = 2 * ((a > b) + (a > c)) + (b > c);
        ++out.counts[static_cast<std::size_t>(s)];
      }
    }
  }

  out.valid = 0;
  for (const auto c : out.counts) out.valid += c;
  return out;
}

PatternHistogram count_patterns3(const TimeSeries& x, std::size_t d, Boundary mode) {
  return count_patterns3(std::span<const double>(x.values), d, mode);
}

PatternFrequencies to_frequencies(const PatternHistogram& h) {
  if (h.valid == 0) {
    throw DegenerateDataError("no valid triples at delay " + std::to_string(h.d));
  }
  PatternFrequencies f;
  f.valid = h.valid;
  f.d = h.d;
  const double s = static_cast<double>(h.valid);
  for (std::size_t i = 0; i < kPatternCount3; ++i) {
    f.p[i] = static_cast<double>(h.counts[i]) / s;
  }
  return f;
}

std::size_t pattern_space_size(std::size_t order) {
  if (order < 2 || order > 7) {
    throw DomainError("pattern order must be between 2 and 7");
  }
  std::size_t f = 1;
  for (std::size_t i = 2; i <= order; ++i) f *= i;
  return f;
}

OrderNHistogram count_patterns_n(std::span<const double> x, std::size_t d,
                                 std::size_t order, Boundary mode) {
  const std::size_t T = x.size();
  const std::size_t nfact = pattern_space_size(order);

  OrderNHistogram out;
  out.order = order;
  out.counts.assign(nfact, 0);
  out.d = d;
  out.mode = mode;

  const std::size_t span = (order - 1) * d;
  std::size_t positions = 0;
  if (mode == Boundary::linear) {
    if (d < 1 || T < span + 1) {
      throw_delay_error(d, span > 0 && T > order - 1 ? (T - 1) / (order - 1) : 0,
                        "order-n counting");
    }
    positions = T - span;
  } else {
    if (d < 1) {
      throw DomainError("delay must be positive");
    }
    positions = T;
  }

  // factorials for the Lehmer code
  std::array<std::size_t, 8> fact{1, 1, 2, 6, 24, 120, 720, 5040};
  std::array<double, 7> w{};

  for (std::size_t t = 0; t < positions; ++t) {
    bool bad = false;
    for (std::size_t i = 0; i < order; ++i) {
      const std::size_t idx = mode == Boundary::linear ? t + i * d : (t + i * d) % T;
      w[i] = x[idx];
      if (std::isnan(w[i])) bad = true;
    }
    if (!bad) {
      for (std::size_t i = 0; i + 1 < order && !bad; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
          if (w[i] == w[j]) {
            bad = true;
            break;
          }
        }
      }
    }
    if (bad) {
      ++out.excluded;
      continue;
    }
    // Lexicographic rank of the rank vector: at slot i, count later slots
    // holding a smaller value. That is exactly the Lehmer digit of the
    // rank vector, since ranks compare like the values themselves.
    std::size_t rank = 0;
    for (std::size_t i = 0; i + 1 < order; ++i) {
      std::size_t smaller_later = 0;
      for (std::size_t j = i + 1; j < order; ++j) {
        if (w[j] < w[i]) ++smaller_later;
      }
      rank += smaller_later * fact[order - 1 - i];
    }
    ++out.counts[rank];
  }

  out.valid = 0;
  for (const auto c : out.counts) out.valid += c;
  return out;
}

OrderNHistogram count_patterns_n(const TimeSeries& x, std::size_t d,
                                 std::size_t order, Boundary mode) {
  return count_patterns_n(std::span<const double>(x.values), d, order, mode);
}

}  // namespace ordinalscan
