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

// Slow reference implementations used as test oracles. They classify
// patterns by explicitly ranking values and matching rank vectors, never by
// the production symbol formula or Lehmer code, so agreement is meaningful.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ordinalscan/patterns.hpp"
#include "ordinalscan/time_series.hpp"

namespace oracle {

struct Pair3 {
  std::array<std::uint64_t, 6> counts{};
  std::uint64_t excluded_ties = 0;
  std::uint64_t excluded_missing = 0;
};

// Rank vector of distinct values: r[i] = 1 + #(values below w[i]).
inline std::vector<int> rank_vector(const std::vector<double>& w) {
  std::vector<int> r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int below = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] < w[i]) ++below;
    }
    r[i] = below + 1;
  }
  return r;
}

// Index of a length-3 rank vector in the fixed pattern order
// 123,132,213,231,312,321. Returns -1 when not tie-free.
inline int classify_triple(double a, double b, double c) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c)) return -2;
  if (a == b || a == c || b == c) return -1;
  const std::vector<int> r = rank_vector({a, b, c});
  static const std::array<std::array<int, 3>, 6> table{{
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
  }};
  for (int k = 0; k < 6; ++k) {
    if (table[static_cast<std::size_t>(k)] ==
        std::array<int, 3>{r[0], r[1], r[2]}) {
      return k;
    }
  }
  return -1;  // unreachable
}

inline Pair3 count_triples(const std::vector<double>& x, std::size_t d,
                           ordinalscan::Boundary mode) {
  Pair3 out;
  const std::size_t T = x.size();
  const std::size_t positions = mode == ordinalscan::Boundary::linear ? T - 2 * d : T;
  for (std::size_t t = 0; t < positions; ++t) {
    const double a = x[t];
    const double b = x[mode == ordinalscan::Boundary::linear ? t + d : (t + d) % T];
    const double c = x[mode == ordinalscan::Boundary::linear ? t + 2 * d : (t + 2 * d) % T];
    const int k = classify_triple(a, b, c);
    if (k == -2) {
      ++out.excluded_missing;
    } else if (k == -1) {
      ++out.excluded_ties;
    } else {
      ++out.counts[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

struct PairResult {
  std::uint64_t n12 = 0, n21 = 0, excluded = 0;
};

inline PairResult count_pairs(const std::vector<double>& x, std::size_t d,
                              ordinalscan::Boundary mode) {
  PairResult out;
  const std::size_t T = x.size();
  const std::size_t positions = mode == ordinalscan::Boundary::linear ? T - d : T;
  for (std::size_t t = 0; t < positions; ++t) {
    const double a = x[t];
    const double b = x[mode == ordinalscan::Boundary::linear ? t + d : (t + d) % T];
    if (std::isnan(a) || std::isnan(b) || a == b) {
      ++out.excluded;
    } else if (a < b) {
      ++out.n12;
    } else {
      ++out.n21;
    }
  }
  return out;
}

// Lexicographic index of the rank vector among all n! permutations, found
// by enumerating the permutations with std::next_permutation.
inline long order_n_index(const std::vector<double>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::isnan(w[i])) return -1;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return -1;
    }
  }
  const std::vector<int> r = rank_vector(w);
  std::vector<int> perm(w.size());
  std::iota(perm.begin(), perm.end(), 1);
  long index = 0;
  do {
    if (perm == r) return index;
    ++index;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return -1;  // unreachable
}

inline double delta_sq(const std::vector<double>& p) {
  const double uniform = 1.0 / static_cast<double>(p.size());
  double s = 0;
  for (const double v : p) s += (v - uniform) * (v - uniform);
  return s;
}

inline double entropy(const std::vector<double>& p) {
  double h = 0;
  for (const double v : p) {
    if (v > 0) h -= v * std::log(v);
  }
  return h;
}

// Binomial(n, 1/2) tail sums from Pascal's triangle in long double.
inline long double binom_upper_tail(std::uint64_t k, std::uint64_t n) {
  std::vector<long double> row{1.0L};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<long double> next(i + 1, 1.0L);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  long double tail = 0;
  for (std::uint64_t i = k; i <= n; ++i) tail += row[i];
  return tail / std::pow(2.0L, static_cast<long double>(n));
}

}  // namespace oracle
