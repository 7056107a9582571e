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

#include "mimocap/combining.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mimocap {

BranchSet::BranchSet(std::vector<double> amplitudes, double noise_power)
    : amplitudes_(std::move(amplitudes)), noise_power_(noise_power) {
  if (amplitudes_.empty()) {
    throw ValidationError("branch set needs at least one branch");
  }
  for (double a : amplitudes_) {
    if (!std::isfinite(a) || a < 0.0) {
      throw ValidationError("branch amplitudes must be finite and >= 0");
    }
  }
  if (!std::isfinite(noise_power_) || noise_power_ <= 0.0) {
    throw ValidationError("noise power must be finite and > 0");
  }
  if (amplitudes_.size() > static_cast<std::size_t>(kMaxAntennas)) {
    throw ValidationError("at most " + std::to_string(kMaxAntennas) + " branches supported");
  }
}

BranchSet branches_from_channel(const ChannelRealization& h, double noise_power) {
  std::vector<double> amplitudes;
  amplitudes.reserve(static_cast<std::size_t>(h.rows()));
  for (int r = 0; r < h.rows(); ++r) amplitudes.push_back(std::abs(h.at(r, 0)));
  return BranchSet(std::move(amplitudes), noise_power);
}

std::string_view to_string(CombinerKind kind) {
  switch (kind) {
    case CombinerKind::Selection: return "selection";
    case CombinerKind::MaximalRatio: return "maximal_ratio";
    case CombinerKind::EqualGain: return "equal_gain";
  }
  return "unknown";
}

CombinerKind parse_combiner(std::string_view name) {
  if (name == "selection" || name == "sc") return CombinerKind::Selection;
  if (name == "maximal_ratio" || name == "mrc") return CombinerKind::MaximalRatio;
  if (name == "equal_gain" || name == "egc") return CombinerKind::EqualGain;
  throw ValidationError("unknown combining scheme '" + std::string(name) +
                        "' (valid: selection, maximal_ratio, equal_gain)");
}

Snr combine_snr(CombinerKind kind, const BranchSet& branches, double tx_power) {
  if (!std::isfinite(tx_power) || tx_power <= 0.0) {
    throw ValidationError("tx power must be finite and > 0");
  }
  const auto& a = branches.amplitudes();
  const double noise = branches.noise_power();
  switch (kind) {
    case CombinerKind::Selection: {
      const double best = *std::max_element(a.begin(), a.end());
      return Snr::from_linear(tx_power * (best * best) / noise);
    }
    case CombinerKind::MaximalRatio: {
      double energy = 0.0;
      for (double x : a) energy += x * x;
      return Snr::from_linear(tx_power * energy / noise);
    }
    case CombinerKind::EqualGain: {
      double amplitude_sum = 0.0;
      for (double x : a) amplitude_sum += x;
      const double n = static_cast<double>(a.size());
      return Snr::from_linear(tx_power * (amplitude_sum * amplitude_sum) / (n * noise));
    }
  }
  throw ValidationError("unhandled combining scheme");
}

CapacityResult combined_capacity(CombinerKind kind, const BranchSet& branches, Bandwidth b,
                                 double tx_power) {
  auto result = siso_capacity(b, combine_snr(kind, branches, tx_power));
  result.config = AntennaConfig(1, static_cast<int>(branches.size()));
  return result;
}

}  // namespace mimocap
