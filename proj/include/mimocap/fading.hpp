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

// Monte-Carlo Rayleigh-fading capacity estimator.
//
// The channel is an nR x nT matrix of i.i.d. CN(0, 1) gains. Instantaneous
// capacity is B log2 det(I + (snr / nT) H H^H): total transmit power is held
// fixed and split evenly across the transmit antennas.
//
// Random streams: trial t under seed s uses a xoshiro256** generator whose
// state is filled by SplitMix64 started at mix64(s) ^ mix64(t + 1) (see
// Rng::for_trial). Every entry consumes exactly two uniforms, so a trial's
// draws depend only on (s, t) and never on scheduling.
//
// Reduction: trials are grouped into fixed blocks of kReductionBlock; each
// block is reduced to (count, mean, M2) by pairwise summation and blocks are
// merged in a fixed pairwise tree (Chan et al. update). The result is
// therefore identical for any worker count.

#ifndef MIMOCAP_FADING_HPP
#define MIMOCAP_FADING_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mimocap/types.hpp"

namespace mimocap {

std::uint64_t mix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for one Monte-Carlo trial.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();
  // Uniform in the open interval (0, 1), 53-bit resolution.
  double uniform();
  // Circularly-symmetric complex Gaussian, zero mean, unit variance.
  std::complex<double> complex_gaussian();

 private:
  std::array<std::uint64_t, 4> state_;
};

class ChannelRealization {
 public:
  ChannelRealization(int rows, int cols, std::vector<std::complex<double>> gains);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::complex<double>& at(int row, int col) const { return gains_[index(row, col)]; }
  std::span<const std::complex<double>> gains() const { return gains_; }

  // Top-left rows x cols block, used for paired antenna-count comparisons.
  ChannelRealization leading_block(int rows, int cols) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col);
  }
  int rows_;
  int cols_;
  std::vector<std::complex<double>> gains_;
};

// n_rx x n_tx draw, row-major, entries filled row by row.
ChannelRealization draw_channel(const AntennaConfig& config, Rng& rng);

// B log2 det(I + (snr / nT) H H^H) via a Cholesky factorization of the
// smaller Gram matrix. Throws ValidationError on non-finite gains.
double logdet_capacity(const ChannelRealization& h, Bandwidth b, Snr snr);

struct ErgodicEstimate {
  double mean_capacity;
  double std_error;
  std::uint64_t trials;
  std::uint64_t seed;

  friend bool operator==(const ErgodicEstimate&, const ErgodicEstimate&) = default;
};

inline constexpr std::size_t kReductionBlock = 1024;

// workers == 0 selects std::thread::hardware_concurrency().
ErgodicEstimate ergodic_capacity(const AntennaConfig& config, Bandwidth b, Snr snr,
                                 std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers = 0);

// Order-fixed pairwise sum.
double pairwise_sum(std::span<const double> values);

}  // namespace mimocap

#endif  // MIMOCAP_FADING_HPP
