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
#include <random>
#include <vector>

#include "ordinalscan/time_series.hpp"

namespace ordinalscan {

/// Deterministic random source: mt19937_64 with 53-bit uniforms and
/// Box-Muller Gaussians built from them. The whole stream is a fixed
/// function of the seed, so identical specs reproduce identical series.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Standard Gaussian via Box-Muller on (0,1] x [0,1) uniforms.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

enum class ProcessKind { white_noise, ar2, brownian, periodic, from_series };

enum class Waveform { sine, triangle, square };

/// Parameters for a synthetic process. Unused fields are ignored by
/// generate(); defaults give the standard validation setups (unit-variance
/// noise, the oscillating AR2 with a1 = 1.85, a2 = -0.96, a sine of period
/// 100).
struct GeneratorSpec {
  ProcessKind kind = ProcessKind::white_noise;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  double noise_std = 1.0;     // white_noise, ar2, brownian step std
  double a1 = 1.85;           // ar2
  double a2 = -0.96;          // ar2
  std::size_t period = 100;   // periodic
  Waveform waveform = Waveform::sine;
  double amplitude = 1.0;     // periodic
  std::vector<double> base;   // from_series
};

/// Generate a reproducible series. AR2 coefficients must describe a
/// stationary process (checked); 1000 burn-in samples are discarded. The
/// periodic waveform is evaluated on t mod period, so the period is exact
/// down to the bit. from_series returns the stored base (truncated to
/// `length` when that is smaller).
TimeSeries generate(const GeneratorSpec& spec);

enum class DisturbanceKind {
  additive_white_noise,  // Gaussian noise at a given signal-to-noise ratio
  outliers,              // replace a fraction of values by +-A*std(x) spikes
  low_freq,              // add sin(t / period_scale)
  monotone_transform,    // apply y = exp(x / scale)
};

/// SNR is variance(signal)/variance(noise). Outlier positions are drawn
/// uniformly without replacement; magnitude is fixed at
/// amplitude_sigmas * std(x) with a random sign.
struct DisturbanceSpec {
  DisturbanceKind kind = DisturbanceKind::additive_white_noise;
  double snr = 1.0;
  double fraction = 0.01;
  double amplitude_sigmas = 20.0;
  double period_scale = 300.0;
  double transform_scale = 7.0;
  std::uint64_t seed = 0;
};

TimeSeries disturb(const TimeSeries& x, const DisturbanceSpec& spec);

/// Theoretical autocorrelation of the AR2 process by the Yule-Walker
/// recursion, for lags 0..max_lag.
std::vector<double> ar2_autocorrelation(double a1, double a2, std::size_t max_lag);

}  // namespace ordinalscan
