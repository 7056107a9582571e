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

#include "mimocap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "mimocap/capacity.hpp"
#include "mimocap/fading.hpp"

namespace mimocap {

namespace {

int parse_count(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw ValidationError("series: bad " + std::string(what) + " count '" + std::string(text) +
                          "'");
  }
  return value;
}

constexpr std::string_view kPowerNormalization =
    "ergodic series use per-antenna power snr/nT (total transmit power fixed); "
    "closed-form series apply their formula to the linear SNR directly";

}  // namespace

Series parse_series(std::string_view text, std::uint64_t trials, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("series '" + std::string(text) +
                          "' must look like <model>:<nT>x<nR>, e.g. product_gain:2x2");
  }
  const auto model_text = text.substr(0, colon);
  const auto dims = text.substr(colon + 1);
  const auto x = dims.find('x');
  if (x == std::string_view::npos) {
    throw ValidationError("series '" + std::string(text) + "' is missing the <nT>x<nR> part");
  }
  const int n_tx = parse_count(dims.substr(0, x), "nT");
  const int n_rx = parse_count(dims.substr(x + 1), "nR");
  return Series{AntennaConfig(n_tx, n_rx), CapacityModel::parse(model_text, trials, seed)};
}

void SweepSpec::validate() const {
  if (!std::isfinite(snr_start_db)) throw ValidationError("snr_start_db must be finite");
  if (!std::isfinite(snr_stop_db)) throw ValidationError("snr_stop_db must be finite");
  if (!(snr_start_db < snr_stop_db)) {
    throw ValidationError("snr_start_db must be below snr_stop_db");
  }
  if (points < 2) throw ValidationError("points must be >= 2");
  if (series.empty()) throw ValidationError("series must not be empty");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!seen.insert(series[i].name()).second) {
      throw ValidationError("series[" + std::to_string(i) + "]: duplicate series " +
                            series[i].name());
    }
  }
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::max(points, 0)));
  const double span = snr_stop_db - snr_start_db;
  const double steps = static_cast<double>(points - 1);
  for (int k = 0; k < points; ++k) {
    values.push_back(snr_start_db + static_cast<double>(k) * span / steps);
  }
  return values;
}

ComparisonDataset run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  const auto grid = spec.grid();

  std::vector<CapacityCurve> curves;
  curves.reserve(spec.series.size());
  for (const auto& s : spec.series) curves.push_back({s.config, s.model, {}});
  std::vector<std::exception_ptr> errors(spec.series.size());

  auto fill = [&](std::size_t index) {
    const auto& s = spec.series[index];
    auto& curve = curves[index];
    try {
      curve.points.reserve(grid.size());
      for (double snr_db : grid) {
        const Snr snr = Snr::from_db(snr_db);
        if (s.model.kind() == ModelKind::ErgodicMonteCarlo) {
          const auto& params = *s.model.ergodic_params();
          const auto est =
              ergodic_capacity(s.config, spec.bandwidth, snr, params.trials, params.seed);
          curve.points.push_back({snr_db, est.mean_capacity, est.std_error});
        } else {
          curve.points.push_back(
              {snr_db, evaluate(s.model, spec.bandwidth, s.config, snr).bits_per_second, {}});
        }
      }
      curve.validate();
    } catch (const ModelMismatchError& e) {
      errors[index] = std::make_exception_ptr(ModelMismatchError(
          "series[" + std::to_string(index) + "] (" + s.name() + "): " + e.what()));
    } catch (...) {
      errors[index] = std::current_exception();
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1 || spec.series.size() == 1) {
    for (std::size_t i = 0; i < spec.series.size(); ++i) fill(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const auto count = std::min<std::size_t>(workers, spec.series.size());
    for (std::size_t w = 0; w < count; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < spec.series.size(); i = next++) fill(i);
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Provenance provenance{spec, std::string(kToolVersion), "", {}, std::string(kPowerNormalization)};
  for (const auto& s : spec.series) {
    if (s.model.ergodic_params()) provenance.seeds.push_back(s.model.ergodic_params()->seed);
  }
  return {std::move(curves), std::move(provenance)};
}

std::vector<std::string_view> preset_names() { return {"figure7", "figure8", "figure9"}; }

SweepSpec figure_preset(std::string_view name) {
  SweepSpec spec;
  const auto shannon = CapacityModel::shannon();
  const auto array = CapacityModel::array_gain();
  const auto product = CapacityModel::product_gain();
  if (name == "figure7") {
    spec.series = {{AntennaConfig(2, 1), array}, {AntennaConfig(3, 1), array}};
  } else if (name == "figure8") {
    spec.series = {{AntennaConfig(1, 1), shannon},
                   {AntennaConfig(2, 2), product},
                   {AntennaConfig(3, 3), product},
                   {AntennaConfig(4, 4), product}};
  } else if (name == "figure9") {
    spec.series = {{AntennaConfig(1, 1), shannon}, {AntennaConfig(2, 1), array},
                   {AntennaConfig(3, 1), array},   {AntennaConfig(2, 2), product},
                   {AntennaConfig(3, 3), product}};
  } else {
    throw ValidationError("unknown preset '" + std::string(name) +
                          "' (valid: figure7, figure8, figure9)");
  }
  return spec;
}

std::vector<std::size_t> preset_expected_order(std::string_view name) {
  if (name == "figure7") return {1, 0};
  if (name == "figure8") return {3, 2, 1, 0};
  if (name == "figure9") return {4, 3, 2, 1, 0};
  throw ValidationError("unknown preset '" + std::string(name) +
                        "' (valid: figure7, figure8, figure9)");
}

std::size_t OrderingReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const auto& p) { return !p.passed; }));
}

OrderingReport assert_ordering(const ComparisonDataset& dataset,
                               const std::vector<std::size_t>& expected_order) {
  if (expected_order.empty()) throw ValidationError("expected order must not be empty");
  for (std::size_t idx : expected_order) {
    if (idx >= dataset.curves.size()) {
      throw ValidationError("order index " + std::to_string(idx) + " out of range (dataset has " +
                            std::to_string(dataset.curves.size()) + " series)");
    }
  }
  OrderingReport report;
  report.expected_order = expected_order;
  const auto& reference = dataset.curves[expected_order.front()].points;
  for (std::size_t p = 0; p < reference.size(); ++p) {
    PointOrdering point{reference[p].snr_db, true, 0};
    for (std::size_t k = 0; k + 1 < expected_order.size(); ++k) {
      const double upper = dataset.curves[expected_order[k]].points[p].capacity;
      const double lower = dataset.curves[expected_order[k + 1]].points[p].capacity;
      if (!(upper > lower)) {
        point.passed = false;
        point.violation_at = k;
        break;
      }
    }
    report.passed = report.passed && point.passed;
    report.points.push_back(point);
  }
  return report;
}

std::string format_ordering_report(const ComparisonDataset& dataset,
                                   const OrderingReport& report) {
  std::ostringstream out;
  out << "expected order:";
  for (std::size_t k = 0; k < report.expected_order.size(); ++k) {
    out << (k == 0 ? " " : " > ") << dataset.curves[report.expected_order[k]].name();
  }
  out << '\n';
  for (const auto& p : report.points) {
    out << "snr_db=" << format_number(p.snr_db) << ' ';
    if (p.passed) {
      out << "pass\n";
    } else {
      out << "FAIL " << dataset.curves[report.expected_order[p.violation_at]].name()
          << " <= " << dataset.curves[report.expected_order[p.violation_at + 1]].name() << '\n';
    }
  }
  out << (report.passed ? "PASS" : "FAIL") << ": " << report.points.size() - report.failures()
      << '/' << report.points.size() << " points in order\n";
  return out.str();
}

GapReport oracle_gap_report(const std::vector<AntennaConfig>& configs,
                            const std::vector<double>& snr_dbs, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers) {
  GapReport report{trials, seed, {}};
  const Bandwidth unit;
  for (const auto& config : configs) {
    for (double snr_db : snr_dbs) {
      const Snr snr = Snr::from_db(snr_db);
      const auto est = ergodic_capacity(config, unit, snr, trials, seed, workers);
      const double formula = product_gain_capacity(unit, config, snr).bits_per_second;
      report.rows.push_back(
          {config, snr_db, est.mean_capacity, est.std_error, formula, est.mean_capacity - formula});
    }
  }
  return report;
}

std::string format_gap_report(const GapReport& report) {
  std::ostringstream out;
  out << "# Oracle gap: ergodic Rayleigh log-det capacity minus the nT*nR product-gain formula\n"
      << "# Informational only. No quantitative agreement between the two is claimed;\n"
      << "# the gap documents how far the closed form sits from the fading referee.\n"
      << "# B=1 bit/s/Hz, per-antenna power snr/nT, trials=" << report.trials
      << ", seed=" << report.seed << '\n'
      << "config,snr_db,ergodic,std_error,product_gain,gap\n";
  for (const auto& row : report.rows) {
    out << row.config.n_tx() << 'x' << row.config.n_rx() << ',' << format_number(row.snr_db)
        << ',' << format_number(row.ergodic) << ',' << format_number(row.std_error) << ','
        << format_number(row.product_gain) << ',' << format_number(row.gap) << '\n';
  }
  return out.str();
}

}  // namespace mimocap
