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

#ifndef MIMOCAP_CAPACITY_HPP
#define MIMOCAP_CAPACITY_HPP

#include "mimocap/types.hpp"

namespace mimocap {

struct CapacityResult {
  double bits_per_second;
  CapacityModel model;
  AntennaConfig config;
};

// log2(1 + x) evaluated as log1p(x) / ln 2 so small SNRs keep full precision.
double log2_1p(double x);

// Shannon bound for a single link: B log2(1 + snr).
CapacityResult siso_capacity(Bandwidth b, Snr snr);

// Array-gain bound B log2(1 + n snr) for a MISO or SIMO link with n antennas
// on the multi-antenna side. The reported config is (n, 1).
CapacityResult array_gain_capacity(Bandwidth b, int n, Snr snr);

// B log2(1 + nT nR snr).
CapacityResult product_gain_capacity(Bandwidth b, const AntennaConfig& config, Snr snr);

// Space-time coded multiplexing: min(nT, nR) B log2(1 + snr).
CapacityResult stc_capacity(Bandwidth b, const AntennaConfig& config, Snr snr);

// Dispatches on model. ArrayGain takes n = max(nT, nR) and throws
// ModelMismatchError when both sides carry more than one antenna.
// ErgodicMonteCarlo returns the Monte-Carlo mean from the fading oracle.
CapacityResult evaluate(const CapacityModel& model, Bandwidth b, const AntennaConfig& config,
                        Snr snr);

}  // namespace mimocap

#endif  // MIMOCAP_CAPACITY_HPP
