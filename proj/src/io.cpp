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

#include "mimocap/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mimocap {

using ordered_json = nlohmann::ordered_json;

void emit_csv(const ComparisonDataset& dataset, std::ostream& out) {
  out << "snr_db";
  for (const auto& curve : dataset.curves) out << ',' << curve.name();
  out << '\n';
  if (dataset.curves.empty()) return;
  const auto& grid = dataset.curves.front().points;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    out << format_number(grid[p].snr_db);
    for (const auto& curve : dataset.curves) out << ',' << format_number(curve.points[p].capacity);
    out << '\n';
  }
}

std::string to_csv(const ComparisonDataset& dataset) {
  std::ostringstream out;
  emit_csv(dataset, out);
  return out.str();
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double parse_double(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw ValidationError("csv line " + std::to_string(line_no) + ": bad number '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("csv: missing header row");
  table.header = split(line, ',');
  if (table.header.empty() || table.header.front() != "snr_db") {
    throw ValidationError("csv: first column must be snr_db");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != table.header.size()) {
      throw ValidationError("csv line " + std::to_string(line_no) + ": expected " +
                            std::to_string(table.header.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, line_no));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

ordered_json model_json(const CapacityModel& model) {
  ordered_json j;
  j["kind"] = std::string(model_name(model.kind()));
  if (const auto& params = model.ergodic_params()) {
    j["trials"] = params->trials;
    j["seed"] = params->seed;
  }
  return j;
}

ordered_json config_json(const AntennaConfig& config) {
  return ordered_json{{"n_tx", config.n_tx()},
                      {"n_rx", config.n_rx()},
                      {"kind", std::string(to_string(config.kind()))}};
}

}  // namespace

void emit_json(const ComparisonDataset& dataset, std::ostream& out) {
  const auto& prov = dataset.provenance;
  ordered_json root;
  ordered_json provenance;
  provenance["tool"] = "mimocap";
  provenance["tool_version"] = prov.tool_version;
  if (!prov.preset.empty()) provenance["preset"] = prov.preset;
  provenance["snr_start_db"] = prov.spec.snr_start_db;
  provenance["snr_stop_db"] = prov.spec.snr_stop_db;
  provenance["points"] = prov.spec.points;
  provenance["bandwidth_hz"] = prov.spec.bandwidth.hertz();
  provenance["grid"] = "snr_db = start + k*(stop-start)/(points-1)";
  provenance["seeds"] = prov.seeds;
  provenance["power_normalization"] = prov.power_normalization;
  root["provenance"] = std::move(provenance);

  ordered_json series = ordered_json::array();
  for (const auto& curve : dataset.curves) {
    ordered_json s;
    s["name"] = curve.name();
    s["config"] = config_json(curve.config);
    s["model"] = model_json(curve.model);
    ordered_json points = ordered_json::array();
    for (const auto& p : curve.points) {
      ordered_json point{{"snr_db", p.snr_db}, {"capacity", p.capacity}};
      if (p.std_error) point["stderr"] = *p.std_error;
      points.push_back(std::move(point));
    }
    s["points"] = std::move(points);
    series.push_back(std::move(s));
  }
  root["series"] = std::move(series);
  out << root.dump(2) << '\n';
}

std::string to_json(const ComparisonDataset& dataset) {
  std::ostringstream out;
  emit_json(dataset, out);
  return out.str();
}

void emit_plot_script(const ComparisonDataset& dataset, const std::filesystem::path& csv_path,
                      std::ostream& out) {
  auto image = csv_path;
  image.replace_extension(".png");
  const std::string title =
      dataset.provenance.preset.empty() ? "capacity sweep" : dataset.provenance.preset;
  out << "# gnuplot script generated by mimocap " << dataset.provenance.tool_version << '\n'
      << "# render with: gnuplot <this file>\n"
      << "set datafile separator ','\n"
      << "set terminal png size 900,600 noenhanced\n"
      << "set output '" << image.generic_string() << "'\n"
      << "set title '" << title << "'\n"
      << "set xlabel 'SNR (dB)'\n"
      << "set ylabel 'Capacity (bit/s/Hz)'\n"
      << "set key left top\n"
      << "set grid\n"
      << "plot";
  const std::string csv = csv_path.generic_string();
  for (std::size_t i = 0; i < dataset.curves.size(); ++i) {
    out << (i == 0 ? " " : ", \\\n     ") << '\'' << csv << "' using 1:" << i + 2
        << " with lines lw 2 title '" << dataset.curves[i].name() << '\'';
  }
  out << '\n';
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open " + path.string() + " for writing: " + std::strerror(errno));
  }
  file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ValidationError("format must be csv or json (got '" + std::string(text) + "')");
}

SweepSpec RunConfig::to_sweep_spec() const {
  SweepSpec spec;
  spec.snr_start_db = snr_start_db;
  spec.snr_stop_db = snr_stop_db;
  spec.points = points;
  try {
    spec.bandwidth = Bandwidth(bandwidth_hz);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("bandwidth_hz: ") + e.what());
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    try {
      spec.series.push_back(parse_series(series[i], trials, seed));
    } catch (const ValidationError& e) {
      throw ValidationError("series[" + std::to_string(i) + "]: " + e.what());
    }
  }
  spec.validate();
  return spec;
}

namespace {

template <typename T>
T get_field(const nlohmann::json& j, const std::string& key, std::string_view expected) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(key + ": expected " + std::string(expected));
  }
}

}  // namespace

RunConfig parse_run_config(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("config: top level must be an object");

  RunConfig config;
  for (const auto& [key, value] : root.items()) {
    if (key == "snr_start_db") {
      config.snr_start_db = get_field<double>(value, key, "number");
    } else if (key == "snr_stop_db") {
      config.snr_stop_db = get_field<double>(value, key, "number");
    } else if (key == "points") {
      if (!value.is_number_integer()) throw ValidationError("points: expected integer");
      config.points = value.get<int>();
    } else if (key == "bandwidth_hz") {
      config.bandwidth_hz = get_field<double>(value, key, "number");
    } else if (key == "series") {
      config.series = get_field<std::vector<std::string>>(value, key, "list of strings");
    } else if (key == "output") {
      config.output = get_field<std::string>(value, key, "string");
    } else if (key == "format") {
      config.format = parse_format(get_field<std::string>(value, key, "string"));
    } else if (key == "plot_script") {
      if (!value.is_boolean()) throw ValidationError("plot_script: expected boolean");
      config.plot_script = value.get<bool>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ValidationError("seed: expected unsigned integer");
      config.seed = value.get<std::uint64_t>();
    } else if (key == "trials") {
      if (!value.is_number_unsigned()) throw ValidationError("trials: expected unsigned integer");
      config.trials = value.get<std::uint64_t>();
    } else {
      throw ValidationError("config: unknown key '" + key + "'");
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read config " + path.string());
  std::ostringstream contents;
  contents << file.rdbuf();
  return parse_run_config(contents.str());
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0') return path;
  return std::filesystem::path(dir) / path;
}

}  // namespace mimocap
