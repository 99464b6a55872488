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

#ifndef QRNG_TRUSTED_HPP_
#define QRNG_TRUSTED_HPP_

#include <optional>
#include <span>
#include <vector>

#include "qrng/gauss_model.hpp"
#include "qrng/quantizer.hpp"

namespace qrng {

struct TrustedOptions {
  // The classical offset e ranges over [-k*sigma_e, k*sigma_e].
  double excursion_sigmas = 12.0;
  // Out-of-range mass above this raises TrustedReport::range_warning.
  double tail_guard = 1e-6;
  TailPolicy tails = TailPolicy::kFold;
  // Slack for "h_min reaches the kept bit count".
  double crossing_tol = 1e-3;
  unsigned threads = 0;
};

struct TrustedReport {
  int m = 0;
  int discarded = 0;
  double h_min = 0.0;         // worst case over the classical offset
  double h_min_uncond = 0.0;  // of the measured signal
  double rtbr = 0.0;          // h_min / m
  double worst_e = 0.0;
  double tail_mass = 0.0;     // largest out-of-range mass seen
  bool range_warning = false;
};

// ADC range wide enough that the conditional distribution stays inside it
// for every offset in the excursion: alpha = k*sigma_e + margin*sigma_q.
AdcConfig auto_range(int bits, const NoiseModel& noise,
                     double margin_sigmas = 5.0,
                     double excursion_sigmas = 12.0);

double min_entropy_unconditional(const AdcConfig& cfg, int m, double sigma_m,
                                 TailPolicy tails = TailPolicy::kFold);

// -log2 of the largest output probability over all offsets e in the
// excursion, with the output distributed as N(e, sigma_q^2) through the ADC.
TrustedReport min_entropy_worst_case(const AdcConfig& cfg, int m,
                                     const NoiseModel& noise,
                                     const TrustedOptions& options = {});

// One report per discarded count 0 .. bits-1.
std::vector<TrustedReport> rtbr_curve(const AdcConfig& cfg,
                                      const NoiseModel& noise,
                                      const TrustedOptions& options = {});

struct TruncationChoice {
  int discarded = 0;
  double h_min = 0.0;
  bool crossed = false;  // false: no discard count reached the bound
};

// First discard count at which h_min >= m - tol. Falls back to bits-1.
TruncationChoice optimal_truncation(std::span<const TrustedReport> curve,
                                    double tol = 1e-3);
TruncationChoice optimal_truncation(const AdcConfig& cfg,
                                    const NoiseModel& noise,
                                    const TrustedOptions& options = {});

// A family of curves sharing sigma_q and the ADC resolution, one per ratio
// sigma_e / sigma_q. Without a fixed alpha each curve gets auto_range().
struct FamilyConfig {
  int bits = 16;
  double sigma_q = 1.0;
  std::vector<double> noise_ratios{0, 1, 2, 3, 4, 10, 100};
  std::optional<double> alpha;
  double margin_sigmas = 5.0;
  TrustedOptions options;
};

struct NoiseCurve {
  double noise_ratio = 0.0;
  AdcConfig adc{1.0, 1};
  std::vector<TrustedReport> reports;
};

std::vector<NoiseCurve> trusted_family(const FamilyConfig& config);

}  // namespace qrng

#endif  // QRNG_TRUSTED_HPP_
