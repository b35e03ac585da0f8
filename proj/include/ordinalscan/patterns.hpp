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
#include <vector>

#include "ordinalscan/time_series.hpp"

namespace ordinalscan {

// Length-3 order patterns, indexed by the symbol
//
//   s = 2*((y0 > y1) + (y0 > y2)) + (y1 > y2)
//
// of a tie-free triple (y0, y1, y2) = (x_t, x_{t+d}, x_{t+2d}). Pattern
// digits are the ranks of the three values, so 213 means y1 < y0 < y2.
enum Pattern3 : std::size_t {
  pat123 = 0,
  pat132 = 1,
  pat213 = 2,
  pat231 = 3,
  pat312 = 4,
  pat321 = 5,
};

inline constexpr std::size_t kPatternCount3 = 6;

/// Up/down counts over lag d. In linear mode pair positions run over
/// t = 0..T-d-1, in cyclic mode over t = 0..T-1 with wrapped indices;
/// either way n12 + n21 + excluded equals the number of positions.
struct PairCounts {
  std::uint64_t n12 = 0;       // x_t < x_{t+d}
  std::uint64_t n21 = 0;       // x_t > x_{t+d}
  std::uint64_t excluded = 0;  // ties and pairs touching a missing value
  std::size_t d = 1;
  Boundary mode = Boundary::linear;

  std::uint64_t positions() const { return n12 + n21 + excluded; }
};

/// Tally of the six length-3 patterns at one delay. Ties and missing values
/// are excluded separately (missing wins when a triple has both), and
/// valid + excluded_ties + excluded_missing equals the number of triple
/// positions (T-2d linear, T cyclic).
struct PatternHistogram {
  std::array<std::uint64_t, kPatternCount3> counts{};
  std::uint64_t excluded_ties = 0;
  std::uint64_t excluded_missing = 0;
  std::uint64_t valid = 0;  // sum of the six counts
  std::size_t d = 1;
  Boundary mode = Boundary::linear;

  std::uint64_t positions() const { return valid + excluded_ties + excluded_missing; }
};

/// Relative frequencies p_pi = count_pi / valid.
struct PatternFrequencies {
  std::array<double, kPatternCount3> p{};
  std::uint64_t valid = 0;
  std::size_t d = 1;
};

/// Histogram of order-n patterns (2 <= n <= 7). Entry i counts the windows
/// whose rank vector has lexicographic rank i among all n! permutations, so
/// the fully increasing pattern is index 0. Any tie or missing value
/// excludes the window (one bucket; the length-3 counter separates them).
struct OrderNHistogram {
  std::size_t order = 3;
  std::vector<std::uint64_t> counts;  // n! entries
  std::uint64_t excluded = 0;
  std::uint64_t valid = 0;
  std::size_t d = 1;
  Boundary mode = Boundary::linear;
};

PairCounts count_pairs(std::span<const double> x, std::size_t d,
                       Boundary mode = Boundary::linear);
PairCounts count_pairs(const TimeSeries& x, std::size_t d,
                       Boundary mode = Boundary::linear);

PatternHistogram count_patterns3(std::span<const double> x, std::size_t d,
                                 Boundary mode = Boundary::linear);
PatternHistogram count_patterns3(const TimeSeries& x, std::size_t d,
                                 Boundary mode = Boundary::linear);

/// Throws DegenerateDataError when the histogram has no valid triples.
PatternFrequencies to_frequencies(const PatternHistogram& h);

OrderNHistogram count_patterns_n(std::span<const double> x, std::size_t d,
                                 std::size_t order, Boundary mode = Boundary::linear);
OrderNHistogram count_patterns_n(const TimeSeries& x, std::size_t d,
                                 std::size_t order, Boundary mode = Boundary::linear);

/// n! for n <= 7.
std::size_t pattern_space_size(std::size_t order);

}  // namespace ordinalscan
