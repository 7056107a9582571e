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

#ifndef MIMOCAP_TYPES_HPP
#define MIMOCAP_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mimocap {

// Raised for any argument that violates a domain invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ArrayGain requested for a configuration it is not defined on.
class ModelMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAntennas = 64;

// Signal-to-noise power ratio. Stored linear; dB only at the boundaries.
class Snr {
 public:
  constexpr Snr() = default;

  static Snr from_linear(double linear);
  static Snr from_db(double db);

  constexpr double linear() const { return linear_; }
  double db() const;

  friend constexpr bool operator==(Snr, Snr) = default;

 private:
  constexpr explicit Snr(double linear) : linear_(linear) {}
  double linear_ = 0.0;
};

Snr db_to_linear(double db);
double linear_to_db(Snr snr);

enum class LinkKind { Siso, Simo, Miso, Mimo };

std::string_view to_string(LinkKind kind);

class AntennaConfig {
 public:
  // Throws ValidationError unless both counts lie in [1, kMaxAntennas].
  AntennaConfig(int n_tx, int n_rx);

  constexpr int n_tx() const { return n_tx_; }
  constexpr int n_rx() const { return n_rx_; }
  LinkKind kind() const;

  friend constexpr bool operator==(const AntennaConfig&, const AntennaConfig&) = default;

 private:
  int n_tx_;
  int n_rx_;
};

LinkKind classify(const AntennaConfig& config);

class Bandwidth {
 public:
  constexpr Bandwidth() = default;
  explicit Bandwidth(double hertz);

  constexpr double hertz() const { return hertz_; }

  friend constexpr bool operator==(Bandwidth, Bandwidth) = default;

 private:
  double hertz_ = 1.0;
};

enum class ModelKind { Shannon, ArrayGain, ProductGain, SpaceTimeCoded, ErgodicMonteCarlo };

struct ErgodicParams {
  std::uint64_t trials;
  std::uint64_t seed;

  friend constexpr bool operator==(const ErgodicParams&, const ErgodicParams&) = default;
};

// Which capacity formula to apply. The Monte-Carlo variant carries its
// trial count and seed so a model value fully determines its output.
class CapacityModel {
 public:
  static CapacityModel shannon() { return CapacityModel(ModelKind::Shannon); }
  static CapacityModel array_gain() { return CapacityModel(ModelKind::ArrayGain); }
  static CapacityModel product_gain() { return CapacityModel(ModelKind::ProductGain); }
  static CapacityModel space_time_coded() { return CapacityModel(ModelKind::SpaceTimeCoded); }
  static CapacityModel ergodic(std::uint64_t trials, std::uint64_t seed);

  // Accepts the short names used in CSV headers and on the command line.
  static CapacityModel parse(std::string_view name, std::uint64_t trials = 10000,
                             std::uint64_t seed = 1);

  ModelKind kind() const { return kind_; }
  const std::optional<ErgodicParams>& ergodic_params() const { return ergodic_; }

  friend bool operator==(const CapacityModel&, const CapacityModel&) = default;

 private:
  explicit CapacityModel(ModelKind kind) : kind_(kind) {}
  ModelKind kind_;
  std::optional<ErgodicParams> ergodic_;
};

// Shortest decimal that parses back to the same double ("1", "3.4594316186372978").
std::string format_number(double value);

// "shannon", "array_gain", "product_gain", "stc", "ergodic".
std::string_view model_name(ModelKind kind);

// `<kind>_<nT>x<nR>_<model>`, e.g. "mimo_2x2_product_gain".
std::string series_name(const AntennaConfig& config, const CapacityModel& model);

struct CurvePoint {
  double snr_db;
  double capacity;
  std::optional<double> std_error;
};

struct CapacityCurve {
  AntennaConfig config;
  CapacityModel model;
  std::vector<CurvePoint> points;

  std::string name() const { return series_name(config, model); }
  // Throws ValidationError if snr_db is not strictly increasing or a
  // capacity is negative or non-finite.
  void validate() const;
};

}  // namespace mimocap

#endif  // MIMOCAP_TYPES_HPP
