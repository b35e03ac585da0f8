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

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace ordinalscan {

/// Marker for a missing observation. Any NaN entry counts as missing.
inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }

inline bool is_missing(double v) { return std::isnan(v); }

/// How pattern windows treat the end of the series.
///   linear: positions run to the last complete window, values are used as-is.
///   cyclic: indices wrap modulo the length, which makes the pattern
///           identities exact (no boundary effect).
enum class Boundary { linear, cyclic };

/// A real-valued sequence with NaN as the missing marker. Entries must be
/// finite or missing; infinities are rejected by validate().
struct TimeSeries {
  std::vector<double> values;
  std::optional<double> sample_rate_hz;  // metadata only

  std::size_t size() const { return values.size(); }
};

/// Throws DomainError unless every entry is finite-or-missing, the series is
/// nonempty, and the sample rate (if any) is positive.
void validate(const TimeSeries& x);

enum class CumulativePolicy {
  propagate,     // a missing value makes all later sums missing
  skip_missing,  // missing values add 0; their positions stay flagged missing
};

/// Running sums of the series, for data that represent a density (counts,
/// precipitation, workload) rather than a level.
TimeSeries cumulative_preprocess(const TimeSeries& x,
                                 CumulativePolicy policy = CumulativePolicy::propagate);

}  // namespace ordinalscan
