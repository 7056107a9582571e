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

#include "mimocap/fading.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <thread>

namespace mimocap {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  // SplitMix64 expansion of the seed into the xoshiro state.
  std::uint64_t x = seed;
  for (auto& word : state_) {
    x += kGolden;
    word = mix64(x);
  }
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix64(seed) ^ mix64(trial + 1));
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> Rng::complex_gaussian() {
  // Box-Muller in polar form: |h|^2 ~ Exp(1), phase uniform.
  const double radius = std::sqrt(-std::log(uniform()));
  const double phase = 2.0 * std::numbers::pi * uniform();
  return std::polar(radius, phase);
}

ChannelRealization::ChannelRealization(int rows, int cols,
                                       std::vector<std::complex<double>> gains)
    : rows_(rows), cols_(cols), gains_(std::move(gains)) {
  if (rows < 1 || cols < 1 ||
      gains_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw ValidationError("channel matrix dimensions do not match its gain count");
  }
}

ChannelRealization ChannelRealization::leading_block(int rows, int cols) const {
  if (rows < 1 || cols < 1 || rows > rows_ || cols > cols_) {
    throw ValidationError("leading block exceeds channel dimensions");
  }
  std::vector<std::complex<double>> block;
  block.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) block.push_back(at(r, c));
  }
  return ChannelRealization(rows, cols, std::move(block));
}

ChannelRealization draw_channel(const AntennaConfig& config, Rng& rng) {
  std::vector<std::complex<double>> gains(static_cast<std::size_t>(config.n_rx()) *
                                          static_cast<std::size_t>(config.n_tx()));
  for (auto& g : gains) g = rng.complex_gaussian();
  return ChannelRealization(config.n_rx(), config.n_tx(), std::move(gains));
}

double logdet_capacity(const ChannelRealization& h, Bandwidth b, Snr snr) {
  for (const auto& g : h.gains()) {
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
      throw ValidationError("channel realization has non-finite entries");
    }
  }
  const int rows = h.rows();
  const int cols = h.cols();
  const double scale = snr.linear() / static_cast<double>(cols);

  // det(I + c H H^H) = det(I + c H^H H); factor whichever Gram matrix is smaller.
  const bool use_cols = cols <= rows;
  const int n = use_cols ? cols : rows;
  const int inner = use_cols ? rows : cols;
  auto entry = [&](int outer, int k) { return use_cols ? h.at(k, outer) : h.at(outer, k); };

  // c * G in the lower triangle, overwritten in place by the Cholesky factor.
  std::vector<std::complex<double>> lower(static_cast<std::size_t>(n) * n);
  auto el = [&](int i, int j) -> std::complex<double>& {
    return lower[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      std::complex<double> sum{};
      for (int k = 0; k < inner; ++k) sum += entry(i, k) * std::conj(entry(j, k));
      el(i, j) = scale * sum;
    }
  }

  // Cholesky of I + M, tracking each pivot as 1 + excess so the log uses log1p.
  double log_det = 0.0;
  for (int j = 0; j < n; ++j) {
    double excess = el(j, j).real();
    for (int k = 0; k < j; ++k) excess -= std::norm(el(j, k));
    const double pivot = 1.0 + excess;
    if (!(pivot > 0.0)) {
      throw ValidationError("log-det matrix is not positive definite");
    }
    log_det += std::log1p(excess);
    const double diag = std::sqrt(pivot);
    for (int i = j + 1; i < n; ++i) {
      std::complex<double> sum = el(i, j);
      for (int k = 0; k < j; ++k) sum -= el(i, k) * std::conj(el(j, k));
      el(i, j) = sum / diag;
    }
  }
  return std::max(0.0, b.hertz() * log_det / std::numbers::ln2);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
};

Moments merge(const Moments& a, const Moments& b) {
  const double count = a.count + b.count;
  const double delta = b.mean - a.mean;
  return {count, a.mean + delta * (b.count / count),
          a.m2 + b.m2 + delta * delta * (a.count * b.count / count)};
}

Moments merge_tree(std::span<const Moments> blocks) {
  if (blocks.size() == 1) return blocks.front();
  const std::size_t half = blocks.size() / 2;
  return merge(merge_tree(blocks.first(half)), merge_tree(blocks.subspan(half)));
}

Moments block_moments(const AntennaConfig& config, Bandwidth b, Snr snr, std::uint64_t seed,
                      std::uint64_t first, std::uint64_t last, std::vector<double>& scratch) {
  scratch.clear();
  for (std::uint64_t t = first; t < last; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    scratch.push_back(logdet_capacity(draw_channel(config, rng), b, snr));
  }
  const double count = static_cast<double>(scratch.size());
  const double mean = pairwise_sum(scratch) / count;
  for (double& v : scratch) v = (v - mean) * (v - mean);
  return {count, mean, pairwise_sum(scratch)};
}

}  // namespace

ErgodicEstimate ergodic_capacity(const AntennaConfig& config, Bandwidth b, Snr snr,
                                 std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) {
    throw ValidationError("trials must be >= 1");
  }
  const std::uint64_t block_count = (trials + kReductionBlock - 1) / kReductionBlock;
  std::vector<Moments> blocks(block_count);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, block_count));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    std::vector<double> scratch;
    scratch.reserve(kReductionBlock);
    for (std::uint64_t i = next++; i < block_count; i = next++) {
      const std::uint64_t first = i * kReductionBlock;
      const std::uint64_t last = std::min(trials, first + kReductionBlock);
      blocks[i] = block_moments(config, b, snr, seed, first, last, scratch);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const Moments total = merge_tree(blocks);
  const double n = total.count;
  const double std_error = n > 1.0 ? std::sqrt(total.m2 / (n - 1.0) / n) : 0.0;
  return {total.mean, std_error, trials, seed};
}

}  // namespace mimocap
