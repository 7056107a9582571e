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

#ifndef MIMOCAP_COMBINING_HPP
#define MIMOCAP_COMBINING_HPP

#include <string_view>
#include <vector>

#include "mimocap/capacity.hpp"
#include "mimocap/fading.hpp"
#include "mimocap/types.hpp"

namespace mimocap {

// Per-branch channel amplitudes |h_i| with equal, independent noise power.
class BranchSet {
 public:
  BranchSet(std::vector<double> amplitudes, double noise_power);

  const std::vector<double>& amplitudes() const { return amplitudes_; }
  double noise_power() const { return noise_power_; }
  std::size_t size() const { return amplitudes_.size(); }

 private:
  std::vector<double> amplitudes_;
  double noise_power_;
};

// |h_i0| for every receive branch of a realization (first transmit column).
BranchSet branches_from_channel(const ChannelRealization& h, double noise_power);

enum class CombinerKind { Selection, MaximalRatio, EqualGain };

std::string_view to_string(CombinerKind kind);
// "selection", "maximal_ratio" (alias "mrc"), "equal_gain" (alias "egc").
CombinerKind parse_combiner(std::string_view name);

// Post-combining SNR with branch SNR_i = tx_power a_i^2 / noise:
//   Selection     max_i SNR_i
//   MaximalRatio  sum_i SNR_i
//   EqualGain     tx_power (sum_i a_i)^2 / (n noise)
Snr combine_snr(CombinerKind kind, const BranchSet& branches, double tx_power);

// Shannon capacity at the combined SNR; the config reported is (1, n).
CapacityResult combined_capacity(CombinerKind kind, const BranchSet& branches, Bandwidth b,
                                 double tx_power);

}  // namespace mimocap

#endif  // MIMOCAP_COMBINING_HPP
