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

#ifndef QRNG_SDI_HPP_
#define QRNG_SDI_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qrng/gauss_model.hpp"
#include "qrng/quantizer.hpp"

namespace qrng {

// Heterodyne energy test on a tapped fraction of the source.
struct EnergyTest {
  double transmittance = 0.99;  // T in (1/2, 1]
  double threshold = 3.0;       // M > 0
  std::uint64_t runs = 1000000;
  double p_pass = 0.99;
};

// Upper bound on the probability of a homodyne outcome beyond alpha once
// the energy test passed. Clamped to [0, 1].
double energy_test_gamma(double alpha, double transmittance, double threshold);

// sqrt(2 n gamma / p_pass)
double energy_test_smoothness(std::uint64_t runs, double gamma, double p_pass);

struct EurParams {
  AdcConfig x_cfg;
  AdcConfig p_cfg;
  int m;  // kept X bits
  int s;  // kept P bits
  double hbar = 1.0;
  EnergyTest energy;
  // Carried through to the finite-size ledger only.
  double eps1 = 1e-10;
  double eps_s = 1e-12;

  void validate() const;
};

// |U_{j,k}| bound for the X comb j and the P comb k.
double overlap_u(Code j, Code k, const EurParams& params);

struct OverlapMax {
  double c_inf = 0.0;  // sup |U_{j,k}|^2
  Code j = 0;
  Code k = 0;
};

// Supremum of |U_{j,k}|^2. Ties resolve to the first pair in (j, k)
// lexicographic order.
OverlapMax c_infinity(const EurParams& params);

struct MaxEntropyCheck {
  double bits = 0.0;          // Renyi-1/2 entropy of the P output
  double clipped_mass = 0.0;  // out-of-range mass before renormalization
  bool guard_breached = false;
};

inline constexpr double kClippedMassGuard = 1e-6;

MaxEntropyCheck h_max_check(const SourceSpec& source, const AdcConfig& p_cfg,
                            int s);

// Which quadratures go through LSB truncation. The numbered modes drop
// exactly the MSB where truncation applies; kCustom takes m and s from the
// parameters unchanged.
enum class PostprocessMode {
  kCustom = 0,
  kRaw = 1,     // m = L, s = N
  kLsbX = 2,    // m = L - 1, s = N
  kLsbXP = 3,   // m = L - 1, s = N - 1
};

std::string_view mode_name(PostprocessMode mode);

struct FiniteSizeLedger {
  double gamma = 0.0;      // energy-test bound
  double eps_tilde = 0.0;  // energy-test smoothness
  double eps = 0.0;        // (eps1 - eps_s) / (2 p_pass) - 2 eps_tilde
};

struct SdiReport {
  int resolution = 0;  // X bits
  PostprocessMode mode = PostprocessMode::kCustom;
  int m = 0;
  int s = 0;
  double c_inf = 0.0;
  Code argmax_j = 0;
  Code argmax_k = 0;
  double c_lsbs = 0.0;
  double neg_log2_c = 0.0;  // -log2(c_lsbs)
  double h_max_p = 0.0;
  double extractable = 0.0;  // asymptotic, never negative
  bool clamped = false;
  bool clipped_guard = false;
  FiniteSizeLedger ledger;
};

SdiReport eur_bound(EurParams params, const SourceSpec& source,
                    PostprocessMode mode);

struct SdiCurveConfig {
  double alpha = 0.0;    // X range
  double alpha_p = 0.0;  // P range; 0 means "same as alpha"
  double hbar = 1.0;
  EnergyTest energy;
  double eps1 = 1e-10;
  double eps_s = 1e-12;
  unsigned threads = 0;
};

// eur_bound at X and P resolution r for each r, with fixed ranges.
std::vector<SdiReport> sdi_curve(std::span<const int> resolutions,
                                 const SourceSpec& source,
                                 PostprocessMode mode,
                                 const SdiCurveConfig& config);

}  // namespace qrng

#endif  // QRNG_SDI_HPP_
