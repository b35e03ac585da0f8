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

#include <filesystem>
#include <string>
#include <vector>

#include "ordinalscan/time_series.hpp"
#include "ordinalscan/window.hpp"

namespace ordinalscan {

enum class SeriesFormat {
  csv_single_column,  // one value per line; blank line = missing
  csv_two_column,     // time,value; time must be nondecreasing and is dropped
  raw_f64le,          // packed little-endian doubles
};

struct SeriesFileFormat {
  SeriesFormat format = SeriesFormat::csv_single_column;
  std::string missing_token = "NaN";  // empty fields are missing too
};

/// Throws ParseError (with line number for text formats) on malformed
/// input; infinities are rejected, NaN tokens become the missing marker.
TimeSeries load_series(const std::filesystem::path& path,
                       const SeriesFileFormat& fmt = {});

/// One value per line, full precision (%.17g), NaN for missing. Written
/// atomically (temp file + rename).
void save_series_csv(const TimeSeries& x, const std::filesystem::path& path);

/// Packed little-endian doubles, atomic write.
void save_series_raw(const TimeSeries& x, const std::filesystem::path& path);

enum class MapFormat {
  csv_matrix,  // one row per delay, 9 significant digits, masked = NaN
  pgm_p5,      // binary PGM, delays on rows; masked cells are pixel 0
};

struct MapExportFormat {
  MapFormat format = MapFormat::csv_matrix;
  // Value range mapped onto pixels 0..255 for pgm_p5 (clamped). Ignored for
  // CSV. lo must be strictly below hi.
  double lo = 0.0;
  double hi = 1.0;
};

/// Bit-exact, atomic export. CSV matrices round-trip through
/// load_matrix_csv to 9 significant digits.
void export_map(const WindowMap& m, const MapExportFormat& fmt,
                const std::filesystem::path& path);

/// Reads a numeric matrix as written by export_map (NaN for masked cells).
std::vector<std::vector<double>> load_matrix_csv(const std::filesystem::path& path);

}  // namespace ordinalscan
