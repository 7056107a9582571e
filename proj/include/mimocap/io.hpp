// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mimocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIMOCAP_IO_HPP
#define MIMOCAP_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mimocap/sweep.hpp"

namespace mimocap {

// Header `snr_db,<series>...`, one row per grid point, shortest round-trip
// numbers, '\n' line endings including the last row.
void emit_csv(const ComparisonDataset& dataset, std::ostream& out);
std::string to_csv(const ComparisonDataset& dataset);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Reads what emit_csv writes. Throws ValidationError on malformed input.
CsvTable parse_csv(std::istream& in);

// {"provenance": {...}, "series": [{name, config, model, points: [...]}, ...]}
void emit_json(const ComparisonDataset& dataset, std::ostream& out);
std::string to_json(const ComparisonDataset& dataset);

// gnuplot script drawing one line per CSV column against snr_db.
void emit_plot_script(const ComparisonDataset& dataset, const std::filesystem::path& csv_path,
                      std::ostream& out);

// Replaces the file contents; throws IoError carrying the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view text);

// Declarative sweep description as read from a JSON config file. Series are
// kept as text until trials and seed are final so flags can override both.
struct RunConfig {
  double snr_start_db = 0.0;
  double snr_stop_db = 20.0;
  int points = 81;
  double bandwidth_hz = 1.0;
  std::vector<std::string> series;
  std::optional<std::string> output;
  OutputFormat format = OutputFormat::Csv;
  bool plot_script = false;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;

  // Throws ValidationError naming the offending key.
  SweepSpec to_sweep_spec() const;
};

// Accepted keys: snr_start_db, snr_stop_db, points, bandwidth_hz, series,
// output, format, plot_script, seed, trials. Anything else is rejected.
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);

// Name of the environment variable that sets the default output directory.
inline constexpr const char* kOutputDirEnv = "MIMOCAP_OUTPUT_DIR";

// Relative paths are placed under $MIMOCAP_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

}  // namespace mimocap

#endif  // MIMOCAP_IO_HPP
