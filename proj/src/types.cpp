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

#include "mimocap/types.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace mimocap {

Snr Snr::from_linear(double linear) {
  if (!std::isfinite(linear) || linear < 0.0) {
    throw ValidationError("SNR must be a finite, nonnegative linear ratio (got " +
                          std::to_string(linear) + ")");
  }
  return Snr(linear);
}

Snr Snr::from_db(double db) {
  if (!std::isfinite(db)) {
    throw ValidationError("SNR in dB must be finite");
  }
  return from_linear(std::pow(10.0, db / 10.0));
}

double Snr::db() const {
  if (linear_ == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear_);
}

Snr db_to_linear(double db) { return Snr::from_db(db); }

double linear_to_db(Snr snr) { return snr.db(); }

std::string_view to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::Siso: return "siso";
    case LinkKind::Simo: return "simo";
    case LinkKind::Miso: return "miso";
    case LinkKind::Mimo: return "mimo";
  }
  return "unknown";
}

AntennaConfig::AntennaConfig(int n_tx, int n_rx) : n_tx_(n_tx), n_rx_(n_rx) {
  if (n_tx < 1 || n_tx > kMaxAntennas) {
    throw ValidationError("n_tx must be in [1, " + std::to_string(kMaxAntennas) +
                          "] (got " + std::to_string(n_tx) + ")");
  }
  if (n_rx < 1 || n_rx > kMaxAntennas) {
    throw ValidationError("n_rx must be in [1, " + std::to_string(kMaxAntennas) +
                          "] (got " + std::to_string(n_rx) + ")");
  }
}

LinkKind AntennaConfig::kind() const {
  const bool multi_tx = n_tx_ > 1;
  const bool multi_rx = n_rx_ > 1;
  if (multi_tx && multi_rx) return LinkKind::Mimo;
  if (multi_tx) return LinkKind::Miso;
  if (multi_rx) return LinkKind::Simo;
  return LinkKind::Siso;
}

LinkKind classify(const AntennaConfig& config) { return config.kind(); }

Bandwidth::Bandwidth(double hertz) : hertz_(hertz) {
  if (!std::isfinite(hertz) || hertz <= 0.0) {
    throw ValidationError("bandwidth must be finite and > 0 Hz (got " +
                          std::to_string(hertz) + ")");
  }
}

CapacityModel CapacityModel::ergodic(std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) {
    throw ValidationError("ergodic model needs trials >= 1");
  }
  CapacityModel model(ModelKind::ErgodicMonteCarlo);
  model.ergodic_ = ErgodicParams{trials, seed};
  return model;
}

CapacityModel CapacityModel::parse(std::string_view name, std::uint64_t trials,
                                   std::uint64_t seed) {
  if (name == "shannon") return shannon();
  if (name == "array_gain") return array_gain();
  if (name == "product_gain") return product_gain();
  if (name == "stc") return space_time_coded();
  if (name == "ergodic") return ergodic(trials, seed);
  throw ValidationError("unknown model '" + std::string(name) +
                        "' (valid: shannon, array_gain, product_gain, stc, ergodic)");
}

std::string format_number(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string_view model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Shannon: return "shannon";
    case ModelKind::ArrayGain: return "array_gain";
    case ModelKind::ProductGain: return "product_gain";
    case ModelKind::SpaceTimeCoded: return "stc";
    case ModelKind::ErgodicMonteCarlo: return "ergodic";
  }
  return "unknown";
}

std::string series_name(const AntennaConfig& config, const CapacityModel& model) {
  std::string name(to_string(config.kind()));
  name += '_';
  name += std::to_string(config.n_tx());
  name += 'x';
  name += std::to_string(config.n_rx());
  name += '_';
  name += model_name(model.kind());
  return name;
}

void CapacityCurve::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.capacity) || p.capacity < 0.0) {
      throw ValidationError(name() + ": capacity at point " + std::to_string(i) +
                            " is negative or non-finite");
    }
    if (i > 0 && !(p.snr_db > points[i - 1].snr_db)) {
      throw ValidationError(name() + ": snr_db not strictly increasing at point " +
                            std::to_string(i));
    }
  }
}

}  // namespace mimocap
