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

#ifndef QRNG_SIMULATOR_HPP_
#define QRNG_SIMULATOR_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qrng/gauss_model.hpp"
#include "qrng/quantizer.hpp"

namespace qrng {

struct SimConfig {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  NoiseModel noise = NoiseModel::from_quantum(1.0, 0.0);
  AdcConfig adc{5.0, 8};
  int m = 8;
  // Samples per independently seeded batch. Part of the stream definition:
  // changing it changes the output.
  std::uint64_t batch_size = std::uint64_t{1} << 16;
  bool keep_symbols = false;
  unsigned threads = 0;
};

struct SimResult {
  std::uint64_t n_samples = 0;
  // Counts per m-LSB output. Clipped samples are folded into the edge codes
  // and also counted in clipped_count.
  std::vector<std::uint64_t> histogram;
  std::uint64_t clipped_count = 0;
  double empirical_h_min = 0.0;  // plug-in estimate
  // |Pr(bit b = 1) - 1/2| for output bit b (b = 0 is the LSB).
  std::vector<double> bias;
  // Lag-1 autocorrelation of the bit stream, each output emitted LSB first.
  double serial_corr = 0.0;
  std::vector<std::uint32_t> symbols;  // only with keep_symbols

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Samples M = Q + E, quantizes and keeps the m LSBs.
SimResult run(const SimConfig& cfg);

// Analytic output distribution matching run(): N(0, sigma_m^2) with the
// clipped tails folded into the edge codes.
std::vector<double> analytic_symbol_probs(const SimConfig& cfg);

struct ZReport {
  std::vector<double> z;  // (freq - p) / sqrt(p (1 - p) / n)
  double max_abs_z = 0.0;

  std::size_t count_within(double k) const;
};

ZReport compare(const SimResult& sim, std::span<const double> analytic);

// Output bits packed LSB first within each byte, outputs in sample order,
// each output contributing m bits starting from its LSB. Requires
// keep_symbols.
void write_bit_dump(std::ostream& os, const SimResult& sim, int m);

}  // namespace qrng

#endif  // QRNG_SIMULATOR_HPP_
