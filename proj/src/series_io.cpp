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

#include "ordinalscan/series_io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "ordinalscan/errors.hpp"

namespace ordinalscan {

namespace {

static_assert(std::endian::native == std::endian::little,
              "raw_f64le import assumes a little-endian host");

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// A field is either the missing token, empty, or a finite decimal real.
double parse_field(std::string_view field, const std::string& missing_token,
                   std::size_t line_no) {
  field = trim(field);
  if (field.empty() || field == missing_token) {
    return missing_value();
  }
  double v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("cannot parse value '" + std::string(field) + "'", line_no);
  }
  if (std::isinf(v)) {
    throw ParseError("infinite value not allowed", line_no);
  }
  return v;  // a parsed "nan" is simply the missing marker
}

class AtomicFile {
 public:
  AtomicFile(const std::filesystem::path& path, std::ios::openmode mode)
      : final_(path), tmp_(path.string() + ".tmp"), out_(tmp_, mode) {
    if (!out_) {
      throw IoError("cannot open '" + tmp_.string() + "' for writing");
    }
  }

  std::ofstream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) {
      throw IoError("write failed for '" + tmp_.string() + "'");
    }
    out_.close();
    std::error_code ec;
    std::filesystem::rename(tmp_, final_, ec);
    if (ec) {
      throw IoError("cannot move '" + tmp_.string() + "' to '" + final_.string() +
                    "': " + ec.message());
    }
    committed_ = true;
  }

  ~AtomicFile() {
    if (!committed_) {
      std::error_code ec;
      std::filesystem::remove(tmp_, ec);
    }
  }

 private:
  std::filesystem::path final_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

}  // namespace

TimeSeries load_series(const std::filesystem::path& path, const SeriesFileFormat& fmt) {
  TimeSeries out;

  if (fmt.format == SeriesFormat::raw_f64le) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open '" + path.string() + "'");
    }
    in.seekg(0, std::ios::end);
    const std::streamoff bytes = in.tellg();
    in.seekg(0, std::ios::beg);
    if (bytes == 0) {
      throw ParseError("empty file '" + path.string() + "'");
    }
    if (bytes % 8 != 0) {
      throw ParseError("raw file length " + std::to_string(bytes) +
                       " is not a multiple of 8 bytes");
    }
    out.values.resize(static_cast<std::size_t>(bytes / 8));
    in.read(reinterpret_cast<char*>(out.values.data()), bytes);
    if (!in) {
      throw ParseError("short read from '" + path.string() + "'");
    }
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      if (std::isinf(out.values[i])) {
        throw ParseError("infinite value at index " + std::to_string(i));
      }
    }
    return out;
  }

  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view sv = line;
    if (fmt.format == SeriesFormat::csv_single_column) {
      out.values.push_back(parse_field(sv, fmt.missing_token, line_no));
    } else {
      const std::size_t comma = sv.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected 'time,value'", line_no);
      }
      const double t = parse_field(sv.substr(0, comma), fmt.missing_token, line_no);
      if (is_missing(t)) {
        throw ParseError("missing time stamp", line_no);
      }
      static_cast<void>(t);
      out.values.push_back(parse_field(sv.substr(comma + 1), fmt.missing_token, line_no));
    }
  }
  if (out.values.empty()) {
    throw ParseError("empty file '" + path.string() + "'");
  }

  if (fmt.format == SeriesFormat::csv_two_column) {
    // re-scan times for monotonicity; cheap compared to a second pass of
    // error handling inside the main loop
    std::ifstream again(path);
    std::size_t no = 0;
    double prev = -std::numeric_limits<double>::infinity();
    while (std::getline(again, line)) {
      ++no;
      const std::string_view sv = line;
      const std::size_t comma = sv.find(',');
      const std::string_view tf = trim(sv.substr(0, comma));
      double t = 0;
      std::from_chars(tf.data(), tf.data() + tf.size(), t);
      if (t < prev) {
        throw ParseError("time column is not nondecreasing", no);
      }
      prev = t;
    }
  }
  return out;
}

void save_series_csv(const TimeSeries& x, const std::filesystem::path& path) {
  AtomicFile file(path, std::ios::out | std::ios::trunc);
  char buf[64];
  for (const double v : x.values) {
    if (is_missing(v)) {
      file.stream() << "NaN\n";
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g\n", v);
      file.stream() << buf;
    }
  }
  file.commit();
}

void save_series_raw(const TimeSeries& x, const std::filesystem::path& path) {
  AtomicFile file(path, std::ios::out | std::ios::trunc | std::ios::binary);
  file.stream().write(reinterpret_cast<const char*>(x.values.data()),
                      static_cast<std::streamsize>(x.values.size() * sizeof(double)));
  file.commit();
}

void export_map(const WindowMap& m, const MapExportFormat& fmt,
                const std::filesystem::path& path) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  if (fmt.format == MapFormat::csv_matrix) {
    AtomicFile file(path, std::ios::out | std::ios::trunc);
    char buf[48];
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
      line.clear();
      for (std::size_t c = 0; c < cols; ++c) {
        if (c > 0) line += ',';
        const double v = m.at(r, c);
        if (m.masked(r, c) || std::isnan(v)) {
          line += "NaN";
        } else {
          std::snprintf(buf, sizeof(buf), "%.9g", v);
          line += buf;
        }
      }
      line += '\n';
      file.stream() << line;
    }
    file.commit();
    return;
  }

  // pgm_p5
  if (!(fmt.hi > fmt.lo)) {
    throw DomainError("pgm export needs hi > lo in the value range");
  }
  AtomicFile file(path, std::ios::out | std::ios::trunc | std::ios::binary);
  file.stream() << "P5\n" << cols << " " << rows << "\n255\n";
  std::vector<unsigned char> row(cols);
  const double scale = 255.0 / (fmt.hi - fmt.lo);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m.masked(r, c)) {
        row[c] = 0;  // gated cells render black
      } else {
        long p = std::lround((m.at(r, c) - fmt.lo) * scale);
        if (p < 0) p = 0;
        if (p > 255) p = 255;
        row[c] = static_cast<unsigned char>(p);
      }
    }
    file.stream().write(reinterpret_cast<const char*>(row.data()),
                        static_cast<std::streamsize>(cols));
  }
  file.commit();
}

std::vector<std::vector<double>> load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<double> row;
    std::string_view sv = line;
    while (true) {
      const std::size_t comma = sv.find(',');
      const std::string_view field = comma == std::string_view::npos ? sv : sv.substr(0, comma);
      const std::string_view t = trim(field);
      if (t == "NaN" || t == "nan") {
        row.push_back(missing_value());
      } else {
        double v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size()) {
          throw ParseError("cannot parse matrix value '" + std::string(t) + "'", line_no);
        }
        row.push_back(v);
      }
      if (comma == std::string_view::npos) break;
      sv.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("empty matrix file '" + path.string() + "'");
  }
  return rows;
}

}  // namespace ordinalscan
