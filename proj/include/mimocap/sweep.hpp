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

#ifndef MIMOCAP_SWEEP_HPP
#define MIMOCAP_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mimocap/types.hpp"

namespace mimocap {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct Series {
  AntennaConfig config;
  CapacityModel model;

  std::string name() const { return series_name(config, model); }
};

// Parses "<model>:<nT>x<nR>", e.g. "product_gain:2x2". Ergodic series take
// trials and seed from the arguments.
Series parse_series(std::string_view text, std::uint64_t trials = 10000,
                    std::uint64_t seed = 1);

struct SweepSpec {
  double snr_start_db = 0.0;
  double snr_stop_db = 20.0;
  int points = 81;
  Bandwidth bandwidth;
  std::vector<Series> series;

  // Throws ValidationError naming the offending field. Series names must be
  // unique because they become CSV column headers.
  void validate() const;
  // start + k (stop - start) / (points - 1) for k = 0 .. points - 1.
  std::vector<double> grid() const;
};

struct Provenance {
  SweepSpec spec;
  std::string tool_version;
  std::string preset;  // empty for ad-hoc sweeps
  std::vector<std::uint64_t> seeds;
  std::string power_normalization;
};

struct ComparisonDataset {
  std::vector<CapacityCurve> curves;
  Provenance provenance;
};

// Series may be evaluated concurrently (workers == 0 picks hardware
// concurrency); curves always come back in series order. A model mismatch is
// rethrown with the offending series index and name.
ComparisonDataset run_sweep(const SweepSpec& spec, unsigned workers = 1);

std::vector<std::string_view> preset_names();
SweepSpec figure_preset(std::string_view name);
// Strongest-first series indices the preset is expected to satisfy.
std::vector<std::size_t> preset_expected_order(std::string_view name);

struct PointOrdering {
  double snr_db;
  bool passed;
  // First adjacent pair (positions into expected_order) that failed.
  std::size_t violation_at = 0;
};

struct OrderingReport {
  std::vector<std::size_t> expected_order;
  std::vector<PointOrdering> points;
  bool passed = true;

  std::size_t failures() const;
};

// Checks capacity(order[0]) > capacity(order[1]) > ... at every grid point.
OrderingReport assert_ordering(const ComparisonDataset& dataset,
                               const std::vector<std::size_t>& expected_order);

std::string format_ordering_report(const ComparisonDataset& dataset,
                                   const OrderingReport& report);

struct GapRow {
  AntennaConfig config;
  double snr_db;
  double ergodic;
  double std_error;
  double product_gain;
  double gap;  // ergodic - product_gain
};

struct GapReport {
  std::uint64_t trials;
  std::uint64_t seed;
  std::vector<GapRow> rows;
};

// Ergodic Monte-Carlo estimate against the product-gain formula on the given
// configs and SNR points, B = 1.
GapReport oracle_gap_report(const std::vector<AntennaConfig>& configs,
                            const std::vector<double>& snr_dbs, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers = 0);

std::string format_gap_report(const GapReport& report);

}  // namespace mimocap

#endif  // MIMOCAP_SWEEP_HPP
