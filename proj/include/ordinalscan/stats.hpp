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
#include <span>

namespace ordinalscan {

/// The c/sqrt(n) fluctuation model for ordinal functions over windows of
/// length n. c absorbs the serial dependence of the sign indicators; under
/// the block model of k repeated independent terms, c = k*sqrt(k).
struct ErrorModel {
  double c = 0;          // dimensionless constant
  std::size_t n = 0;     // window length
  double sigma = 0;      // c / sqrt(n)
  double block_length = 0;  // implied k = c^(2/3)
};

enum class Sided { one, two };

struct MedianTestResult {
  std::uint64_t positives = 0;
  std::uint64_t trials = 0;
  double p_value = 1.0;
  Sided sided = Sided::two;
};

/// Estimate c from values of one ordinal function (typically beta at a fixed
/// delay) computed on non-overlapping, putatively stationary windows of
/// equal length n. Uses the unbiased sample standard deviation.
/// Throws DomainError with fewer than two samples.
ErrorModel estimate_c(std::span<const double> samples, std::size_t n);

/// Smallest window length n with 2*c/sqrt(n) <= target_halfwidth, so the
/// 95% confidence radius for the function value stays inside the target.
/// Never returns less than 1.
std::size_t required_n(double target_halfwidth, double c);

/// Exact binomial sign test against a fair coin. One-sided tests
/// P(X >= positives); two-sided doubles the smaller tail (capped at 1).
/// Exact integer arithmetic for trials <= 64, long-double tail sums above.
MedianTestResult median_test(std::uint64_t positives, std::uint64_t trials, Sided sided);

/// Sign-test over window values. Zeros are a caller error: exact-zero
/// values must be dropped (and reported) before testing.
MedianTestResult median_test(std::span<const double> signs, Sided sided);

/// Null-model scale of delta_sq for window length n: standard deviation
/// about 7/n, and the 15/n gate used as a confidence bound for
/// "indistinguishable from white noise". Requires n >= 3.
struct DeltaSqNullBound {
  double sigma = 0;  // 7/n
  double gate = 0;   // 15/n
};
DeltaSqNullBound delta_sq_null_bound(std::size_t n);

/// Boundary effects grow like d/n; flag delays beyond 5% of the window.
bool large_delay_warning(std::size_t d, std::size_t n);

}  // namespace ordinalscan
