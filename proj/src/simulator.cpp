// Copyright 2026 The qrng-lsb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrng/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "qrng/error.hpp"
#include "qrng/parallel.hpp"

namespace qrng {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Each batch owns a generator derived from (seed, batch index) only.
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch) {
  return splitmix64(seed ^ splitmix64(batch));
}

struct BatchTally {
  std::vector<std::uint64_t> histogram;
  std::vector<std::uint64_t> ones;  // per output bit
  std::uint64_t clipped = 0;
  std::uint64_t pairs11 = 0;  // adjacent 1-1 pairs inside the batch stream
  int first_bit = 0;
  int last_bit = 0;
  std::vector<std::uint32_t> symbols;
};

BatchTally run_batch(const SimConfig& cfg, std::uint64_t batch,
                     std::uint64_t count) {
  const std::size_t symbols = std::size_t{1} << cfg.m;
  BatchTally t;
  t.histogram.assign(symbols, 0);
  t.ones.assign(static_cast<std::size_t>(cfg.m), 0);
  if (cfg.keep_symbols) t.symbols.reserve(count);

  std::mt19937_64 rng(batch_seed(cfg.seed, batch));
  std::normal_distribution<double> quantum(0.0, cfg.noise.sigma_q());
  const bool has_classical = cfg.noise.sigma_e() > 0.0;
  std::normal_distribution<double> classical(
      0.0, has_classical ? cfg.noise.sigma_e() : 1.0);

  int prev = -1;
  for (std::uint64_t i = 0; i < count; ++i) {
    double x = quantum(rng);
    if (has_classical) x += classical(rng);
    const CodeSample s = quantize(x, cfg.adc);
    if (s.clipped) ++t.clipped;
    const Code y = lsb_extract(s.code, cfg.m);
    ++t.histogram[y];
    if (cfg.keep_symbols) t.symbols.push_back(static_cast<std::uint32_t>(y));
    for (int b = 0; b < cfg.m; ++b) {
      const int bit = static_cast<int>((y >> b) & 1U);
      t.ones[static_cast<std::size_t>(b)] += static_cast<std::uint64_t>(bit);
      if (prev < 0) {
        t.first_bit = bit;
      } else if (prev == 1 && bit == 1) {
        ++t.pairs11;
      }
      prev = bit;
    }
  }
  t.last_bit = prev < 0 ? 0 : prev;
  return t;
}

}  // namespace

SimResult run(const SimConfig& cfg) {
  if (cfg.n_samples == 0) throw ParameterError("n_samples must be at least 1");
  if (cfg.batch_size == 0) throw ParameterError("batch size must be positive");
  check_kept_bits(cfg.adc, cfg.m);
  if (cfg.m > 32) throw ParameterError("at most 32 output bits are supported");

  const std::uint64_t batches =
      (cfg.n_samples + cfg.batch_size - 1) / cfg.batch_size;
  std::vector<BatchTally> tallies(batches);
  parallel_for(
      batches,
      [&](std::size_t b) {
        const std::uint64_t start = b * cfg.batch_size;
        const std::uint64_t count =
            std::min(cfg.batch_size, cfg.n_samples - start);
        tallies[b] = run_batch(cfg, b, count);
      },
      cfg.threads);

  SimResult r;
  r.n_samples = cfg.n_samples;
  r.histogram.assign(std::size_t{1} << cfg.m, 0);
  std::vector<std::uint64_t> ones(static_cast<std::size_t>(cfg.m), 0);
  std::uint64_t pairs11 = 0;
  for (std::size_t b = 0; b < tallies.size(); ++b) {
    const BatchTally& t = tallies[b];
    for (std::size_t j = 0; j < r.histogram.size(); ++j) {
      r.histogram[j] += t.histogram[j];
    }
    for (std::size_t i = 0; i < ones.size(); ++i) ones[i] += t.ones[i];
    r.clipped_count += t.clipped;
    pairs11 += t.pairs11;
    if (b > 0 && tallies[b - 1].last_bit == 1 && t.first_bit == 1) ++pairs11;
    if (cfg.keep_symbols) {
      r.symbols.insert(r.symbols.end(), t.symbols.begin(), t.symbols.end());
    }
  }

  const double n = static_cast<double>(cfg.n_samples);
  const auto top = *std::max_element(r.histogram.begin(), r.histogram.end());
  r.empirical_h_min = -std::log2(static_cast<double>(top) / n);

  std::uint64_t total_ones = 0;
  r.bias.resize(ones.size());
  for (std::size_t i = 0; i < ones.size(); ++i) {
    r.bias[i] = std::fabs(static_cast<double>(ones[i]) / n - 0.5);
    total_ones += ones[i];
  }
  const double bits = n * cfg.m;
  const double mean = static_cast<double>(total_ones) / bits;
  const double var = mean * (1.0 - mean);
  if (bits > 1.0 && var > 0.0) {
    r.serial_corr =
        (static_cast<double>(pairs11) / (bits - 1.0) - mean * mean) / var;
  }
  return r;
}

std::vector<double> analytic_symbol_probs(const SimConfig& cfg) {
  return symbol_distribution(cfg.adc, cfg.m, 0.0, cfg.noise.sigma_m(),
                             TailPolicy::kFold)
      .probs;
}

std::size_t ZReport::count_within(double k) const {
  return static_cast<std::size_t>(std::count_if(
      z.begin(), z.end(), [k](double v) { return std::fabs(v) <= k; }));
}

ZReport compare(const SimResult& sim, std::span<const double> analytic) {
  if (analytic.size() != sim.histogram.size()) {
    throw ParameterError("analytic distribution has " +
                         std::to_string(analytic.size()) +
                         " symbols, histogram has " +
                         std::to_string(sim.histogram.size()));
  }
  const double n = static_cast<double>(sim.n_samples);
  ZReport out;
  out.z.resize(analytic.size());
  for (std::size_t j = 0; j < analytic.size(); ++j) {
    const double p = analytic[j];
    const double freq = static_cast<double>(sim.histogram[j]) / n;
    const double var = p * (1.0 - p) / n;
    if (var > 0.0) {
      out.z[j] = (freq - p) / std::sqrt(var);
    } else {
      out.z[j] = freq == p ? 0.0 : INFINITY;
    }
    out.max_abs_z = std::max(out.max_abs_z, std::fabs(out.z[j]));
  }
  return out;
}

void write_bit_dump(std::ostream& os, const SimResult& sim, int m) {
  if (sim.symbols.size() != sim.n_samples) {
    throw ParameterError("bit dump needs a run with keep_symbols");
  }
  unsigned char byte = 0;
  int filled = 0;
  for (std::uint32_t y : sim.symbols) {
    for (int b = 0; b < m; ++b) {
      byte |= static_cast<unsigned char>(((y >> b) & 1U) << filled);
      if (++filled == 8) {
        os.put(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) os.put(static_cast<char>(byte));
}

}  // namespace qrng
