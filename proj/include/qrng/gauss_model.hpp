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

#ifndef QRNG_GAUSS_MODEL_HPP_
#define QRNG_GAUSS_MODEL_HPP_

#include <vector>

#include "qrng/quantizer.hpp"

namespace qrng {

// Standard deviations of the measured signal M = Q + E, the quantum part Q
// and the classical noise E. Q and E are independent Gaussians.
class NoiseModel {
 public:
  static NoiseModel from_measured(double sigma_m, double sigma_e);
  static NoiseModel from_quantum(double sigma_q, double sigma_e);

  double sigma_m() const { return sigma_m_; }
  double sigma_q() const { return sigma_q_; }
  double sigma_e() const { return sigma_e_; }
  // sigma_e / sigma_q
  double noise_ratio() const { return sigma_e_ / sigma_q_; }

  NoiseModel scaled(double factor) const;

 private:
  NoiseModel(double sigma_m, double sigma_q, double sigma_e)
      : sigma_m_(sigma_m), sigma_q_(sigma_q), sigma_e_(sigma_e) {}

  double sigma_m_;
  double sigma_q_;
  double sigma_e_;
};

// A Gaussian state whose quadrature variance is (2*nbar + 1) * v0. The
// default v0 = 1/2 corresponds to hbar = 1.
struct SourceSpec {
  enum class Kind { kVacuum, kThermal };

  Kind kind = Kind::kVacuum;
  double mean_photons = 0.0;
  double vacuum_variance = 0.5;

  static SourceSpec vacuum(double v0 = 0.5);
  static SourceSpec thermal(double nbar, double v0 = 0.5);
};

double marginal_sigma(const SourceSpec& source);

// Mass of N(mu, sigma^2) on (lo, hi]. Infinite bounds are allowed.
double interval_prob(double mu, double sigma, double lo, double hi);

// Mass of N(mu, sigma^2) on the union of the comb's teeth.
double comb_prob(double mu, double sigma, const CombSet& comb);

// What happens to the mass outside (-alpha, alpha].
enum class TailPolicy {
  kFold,         // below -alpha counts as code 0, above alpha as the top code
  kRenormalize,  // dropped; the in-range distribution is renormalized
};

struct SymbolDistribution {
  std::vector<double> probs;  // indexed by m-LSB output j
  double lower_tail = 0.0;    // mass at or below -alpha
  double upper_tail = 0.0;    // mass above alpha

  double tail_mass() const { return lower_tail + upper_tail; }
};

// Distribution of the m-LSB output for input N(mu, sigma^2). Cells further
// than kWindowSigmas from mu are skipped; their total mass is below 1e-22.
SymbolDistribution symbol_distribution(const AdcConfig& cfg, int m, double mu,
                                       double sigma, TailPolicy tails);

inline constexpr double kWindowSigmas = 10.0;

}  // namespace qrng

#endif  // QRNG_GAUSS_MODEL_HPP_
