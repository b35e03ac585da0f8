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

#include "ordinalscan/time_series.hpp"

#include <string>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

void validate(const TimeSeries& x) {
  if (x.values.empty()) {
    throw DomainError("time series must contain at least one value");
  }
  if (x.sample_rate_hz && !(*x.sample_rate_hz > 0.0)) {
    throw DomainError("sample rate must be positive");
  }
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    const double v = x.values[i];
    if (!std::isfinite(v) && !std::isnan(v)) {
      throw DomainError("non-finite value at index " + std::to_string(i) +
                        "; only finite values and NaN are allowed");
    }
  }
}

TimeSeries cumulative_preprocess(const TimeSeries& x, CumulativePolicy policy) {
  TimeSeries out;
  out.sample_rate_hz = x.sample_rate_hz;
  out.values.resize(x.values.size());

  double sum = 0.0;
  bool poisoned = false;
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    const double v = x.values[i];
    if (is_missing(v)) {
      if (policy == CumulativePolicy::propagate) {
        poisoned = true;
      }
      // skip_missing: contributes 0, position stays flagged
      out.values[i] = missing_value();
    } else {
      sum += v;
      out.values[i] = poisoned ? missing_value() : sum;
    }
  }
  return out;
}

}  // namespace ordinalscan
