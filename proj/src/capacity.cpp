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

#include "mimocap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mimocap/fading.hpp"

namespace mimocap {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

CapacityResult siso_capacity(Bandwidth b, Snr snr) {
  return {b.hertz() * log2_1p(snr.linear()), CapacityModel::shannon(), AntennaConfig(1, 1)};
}

CapacityResult array_gain_capacity(Bandwidth b, int n, Snr snr) {
  if (n < 1 || n > kMaxAntennas) {
    throw ValidationError("array gain needs n in [1, " + std::to_string(kMaxAntennas) +
                          "] (got " + std::to_string(n) + ")");
  }
  const double gained = static_cast<double>(n) * snr.linear();
  return {b.hertz() * log2_1p(gained), CapacityModel::array_gain(), AntennaConfig(n, 1)};
}

CapacityResult product_gain_capacity(Bandwidth b, const AntennaConfig& config, Snr snr) {
  const double product = static_cast<double>(config.n_tx() * config.n_rx());
  return {b.hertz() * log2_1p(product * snr.linear()), CapacityModel::product_gain(), config};
}

CapacityResult stc_capacity(Bandwidth b, const AntennaConfig& config, Snr snr) {
  const double streams = std::min(config.n_tx(), config.n_rx());
  return {streams * (b.hertz() * log2_1p(snr.linear())), CapacityModel::space_time_coded(),
          config};
}

CapacityResult evaluate(const CapacityModel& model, Bandwidth b, const AntennaConfig& config,
                        Snr snr) {
  switch (model.kind()) {
    case ModelKind::Shannon: {
      auto result = siso_capacity(b, snr);
      result.config = config;
      return result;
    }
    case ModelKind::ArrayGain: {
      if (config.n_tx() > 1 && config.n_rx() > 1) {
        throw ModelMismatchError("array_gain is defined only for MISO/SIMO links, not " +
                                 std::to_string(config.n_tx()) + "x" +
                                 std::to_string(config.n_rx()));
      }
      auto result = array_gain_capacity(b, std::max(config.n_tx(), config.n_rx()), snr);
      result.config = config;
      return result;
    }
    case ModelKind::ProductGain:
      return product_gain_capacity(b, config, snr);
    case ModelKind::SpaceTimeCoded:
      return stc_capacity(b, config, snr);
    case ModelKind::ErgodicMonteCarlo: {
      const auto& params = *model.ergodic_params();
      const auto estimate = ergodic_capacity(config, b, snr, params.trials, params.seed);
      return {estimate.mean_capacity, model, config};
    }
  }
  throw ValidationError("unhandled capacity model");
}

}  // namespace mimocap
