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

#include "ordinalscan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) {
    throw DomainError("uniform_index bound must be positive");
  }
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] keeps the log finite
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

namespace {

bool ar2_stationary(double a1, double a2) {
  // stationarity triangle for X_t = a1 X_{t-1} + a2 X_{t-2} + W_t
  return std::abs(a2) < 1.0 && a1 + a2 < 1.0 && a2 - a1 < 1.0;
}

double waveform_value(Waveform w, std::size_t phase, std::size_t period) {
  const double frac = static_cast<double>(phase) / static_cast<double>(period);
  switch (w) {
    case Waveform::sine:
      return std::sin(2.0 * std::numbers::pi * frac);
    case Waveform::triangle:
      return frac < 0.5 ? 4.0 * frac - 1.0 : 3.0 - 4.0 * frac;
    case Waveform::square:
      return frac < 0.5 ? 1.0 : -1.0;
  }
  throw DomainError("unknown waveform");
}

double sample_std(const std::vector<double>& v) {
  std::size_t n = 0;
  double mean = 0;
  for (const double x : v) {
    if (!is_missing(x)) {
      ++n;
      mean += x;
    }
  }
  if (n < 2) {
    throw DegenerateDataError("need at least two present values to estimate the scale");
  }
  mean /= static_cast<double>(n);
  double ss = 0;
  for (const double x : v) {
    if (!is_missing(x)) {
      const double dx = x - mean;
      ss += dx * dx;
    }
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace

TimeSeries generate(const GeneratorSpec& spec) {
  TimeSeries out;

  if (spec.kind == ProcessKind::from_series) {
    if (spec.base.empty()) {
      throw DomainError("from_series needs a base series");
    }
    if (spec.length > spec.base.size()) {
      throw DomainError("requested length exceeds the stored base series");
    }
    const std::size_t n = spec.length == 0 ? spec.base.size() : spec.length;
    out.values.assign(spec.base.begin(), spec.base.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  }

  if (spec.length == 0) {
    throw DomainError("generator length must be positive");
  }

  Rng rng(spec.seed);
  out.values.resize(spec.length);

  switch (spec.kind) {
    case ProcessKind::white_noise:
      for (auto& v : out.values) v = spec.noise_std * rng.gaussian();
      break;

    case ProcessKind::brownian: {
      double sum = 0;
      for (auto& v : out.values) {
        sum += spec.noise_std * rng.gaussian();
        v = sum;
      }
      break;
    }

    case ProcessKind::ar2: {
      if (!ar2_stationary(spec.a1, spec.a2)) {
        throw DomainError("AR2 coefficients are not stationary");
      }
      constexpr std::size_t kBurnIn = 1000;
      double prev2 = 0, prev1 = 0;
      for (std::size_t i = 0; i < kBurnIn; ++i) {
        const double v = spec.a1 * prev1 + spec.a2 * prev2 + spec.noise_std * rng.gaussian();
        prev2 = prev1;
        prev1 = v;
      }
      for (auto& v : out.values) {
        const double next =
            spec.a1 * prev1 + spec.a2 * prev2 + spec.noise_std * rng.gaussian();
        prev2 = prev1;
        prev1 = next;
        v = next;
      }
      break;
    }

    case ProcessKind::periodic: {
      if (spec.period < 1) {
        throw DomainError("period must be positive");
      }
      for (std::size_t t = 0; t < spec.length; ++t) {
        out.values[t] =
            spec.amplitude * waveform_value(spec.waveform, t % spec.period, spec.period);
      }
      break;
    }

    case ProcessKind::from_series:
      break;  // handled above
  }
  return out;
}

TimeSeries disturb(const TimeSeries& x, const DisturbanceSpec& spec) {
  TimeSeries out = x;
  Rng rng(spec.seed);
  const std::size_t T = out.values.size();
  if (T == 0) {
    throw DomainError("cannot disturb an empty series");
  }

  switch (spec.kind) {
    case DisturbanceKind::additive_white_noise: {
      if (!(spec.snr > 0)) {
        throw DomainError("signal-to-noise ratio must be positive");
      }
      const double sd = sample_std(out.values);
      const double noise_sd = sd / std::sqrt(spec.snr);
      for (auto& v : out.values) {
        if (!is_missing(v)) v += noise_sd * rng.gaussian();
      }
      break;
    }

    case DisturbanceKind::outliers: {
      if (!(spec.fraction > 0) || !(spec.fraction < 1)) {
        throw DomainError("outlier fraction must be in (0,1)");
      }
      const double sd = sample_std(out.values);
      const double magnitude = spec.amplitude_sigmas * sd;
      const std::size_t count =
          std::max<std::size_t>(1, static_cast<std::size_t>(
                                       std::llround(spec.fraction * static_cast<double>(T))));
      // partial Fisher-Yates gives distinct positions
      std::vector<std::size_t> idx(T);
      for (std::size_t i = 0; i < T; ++i) idx[i] = i;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(T - i));
        std::swap(idx[i], idx[j]);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        out.values[idx[i]] = sign * magnitude;
      }
      break;
    }

    case DisturbanceKind::low_freq: {
      if (!(spec.period_scale > 0)) {
        throw DomainError("period scale must be positive");
      }
      for (std::size_t t = 0; t < T; ++t) {
        if (!is_missing(out.values[t])) {
          out.values[t] += std::sin(static_cast<double>(t) / spec.period_scale);
        }
      }
      break;
    }

    case DisturbanceKind::monotone_transform: {
      if (!(spec.transform_scale > 0)) {
        throw DomainError("transform scale must be positive");
      }
      for (auto& v : out.values) {
        if (!is_missing(v)) v = std::exp(v / spec.transform_scale);
      }
      break;
    }
  }
  return out;
}

std::vector<double> ar2_autocorrelation(double a1, double a2, std::size_t max_lag) {
  if (!ar2_stationary(a1, a2)) {
    throw DomainError("AR2 coefficients are not stationary");
  }
  std::vector<double> rho(max_lag + 1);
  rho[0] = 1.0;
  if (max_lag >= 1) rho[1] = a1 / (1.0 - a2);
  for (std::size_t k = 2; k <= max_lag; ++k) {
    rho[k] = a1 * rho[k - 1] + a2 * rho[k - 2];
  }
  return rho;
}

}  // namespace ordinalscan
