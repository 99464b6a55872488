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

#include "qrng/gauss_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qrng/error.hpp"
#include "qrng/numeric.hpp"

namespace qrng {
namespace {

void check_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("standard deviation must be finite and positive");
  }
}

// Tail mass on the short side of z: Phi(z) for z < 0, 1 - Phi(z) otherwise.
double short_tail(double z) {
  constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
  return z < 0.0 ? 0.5 * std::erfc(-z * kInvSqrt2)
                 : 0.5 * std::erfc(z * kInvSqrt2);
}

// Standard normal mass on (za, zb] given the short tails at both ends.
double standard_mass(double za, double ta, double zb, double tb) {
  if (za >= 0.0) return ta - tb;
  if (zb < 0.0) return tb - ta;
  return 1.0 - ta - tb;
}

}  // namespace

NoiseModel NoiseModel::from_measured(double sigma_m, double sigma_e) {
  if (!(std::isfinite(sigma_m) && std::isfinite(sigma_e))) {
    throw ModelError("noise standard deviations must be finite");
  }
  if (!(sigma_e >= 0.0)) throw ModelError("sigma_e must be non-negative");
  if (!(sigma_m > sigma_e)) {
    throw ModelError("sigma_e must be below sigma_m (sigma_q undefined)");
  }
  const double sigma_q = std::sqrt((sigma_m - sigma_e) * (sigma_m + sigma_e));
  return NoiseModel(sigma_m, sigma_q, sigma_e);
}

NoiseModel NoiseModel::from_quantum(double sigma_q, double sigma_e) {
  if (!(std::isfinite(sigma_q) && std::isfinite(sigma_e))) {
    throw ModelError("noise standard deviations must be finite");
  }
  if (!(sigma_q > 0.0)) throw ModelError("sigma_q must be positive");
  if (!(sigma_e >= 0.0)) throw ModelError("sigma_e must be non-negative");
  return NoiseModel(std::hypot(sigma_q, sigma_e), sigma_q, sigma_e);
}

NoiseModel NoiseModel::scaled(double factor) const {
  if (!(factor > 0.0)) throw ParameterError("scale factor must be positive");
  return NoiseModel(sigma_m_ * factor, sigma_q_ * factor, sigma_e_ * factor);
}

SourceSpec SourceSpec::vacuum(double v0) {
  return SourceSpec{Kind::kVacuum, 0.0, v0};
}

SourceSpec SourceSpec::thermal(double nbar, double v0) {
  if (!(nbar >= 0.0)) {
    throw ParameterError("thermal mean photon number must be non-negative");
  }
  return SourceSpec{Kind::kThermal, nbar, v0};
}

double marginal_sigma(const SourceSpec& source) {
  if (!(source.vacuum_variance > 0.0)) {
    throw ParameterError("vacuum variance must be positive");
  }
  const double nbar =
      source.kind == SourceSpec::Kind::kVacuum ? 0.0 : source.mean_photons;
  if (!(nbar >= 0.0)) {
    throw ParameterError("mean photon number must be non-negative");
  }
  return std::sqrt((2.0 * nbar + 1.0) * source.vacuum_variance);
}

double interval_prob(double mu, double sigma, double lo, double hi) {
  check_sigma(sigma);
  if (!(lo <= hi)) throw ParameterError("interval bounds out of order");
  const double za = (lo - mu) / sigma;
  const double zb = (hi - mu) / sigma;
  return standard_mass(za, short_tail(za), zb, short_tail(zb));
}

double comb_prob(double mu, double sigma, const CombSet& comb) {
  check_sigma(sigma);
  std::vector<double> masses;
  masses.reserve(comb.teeth());
  for (Code t = 0; t < comb.teeth(); ++t) {
    const Interval iv = comb.tooth(t);
    masses.push_back(interval_prob(mu, sigma, iv.lo, iv.hi));
  }
  std::sort(masses.begin(), masses.end());
  CompensatedSum sum;
  for (double p : masses) sum += p;
  return sum.value();
}

SymbolDistribution symbol_distribution(const AdcConfig& cfg, int m, double mu,
                                       double sigma, TailPolicy tails) {
  check_kept_bits(cfg, m);
  check_sigma(sigma);
  if (!std::isfinite(mu)) throw ParameterError("mean must be finite");

  const Code symbols = Code{1} << m;
  const Code top = cfg.levels() - 1;
  const double alpha = cfg.alpha();
  const double delta = cfg.precision();

  SymbolDistribution out;
  out.probs.assign(symbols, 0.0);
  {
    const double z_lo = (-alpha - mu) / sigma;
    const double z_hi = (alpha - mu) / sigma;
    out.lower_tail = z_lo < 0.0 ? short_tail(z_lo) : 1.0 - short_tail(z_lo);
    out.upper_tail = z_hi >= 0.0 ? short_tail(z_hi) : 1.0 - short_tail(z_hi);
  }

  // Cells overlapping [mu - w, mu + w].
  const double w = kWindowSigmas * sigma;
  const double first = std::floor((mu - w + alpha) / delta);
  const double last = std::floor((mu + w + alpha) / delta);
  if (last >= 0.0 && first <= static_cast<double>(top)) {
    const Code i0 = first <= 0.0 ? 0 : static_cast<Code>(first);
    const Code i1 = std::min(top, static_cast<Code>(std::max(last, 0.0)));
    std::vector<CompensatedSum> acc(symbols);
    double za = (cfg.interval_bounds(i0).lo - mu) / sigma;
    double ta = short_tail(za);
    const Code mask = symbols - 1;
    for (Code i = i0; i <= i1; ++i) {
      const double zb = (cfg.interval_bounds(i).hi - mu) / sigma;
      const double tb = short_tail(zb);
      acc[i & mask] += standard_mass(za, ta, zb, tb);
      za = zb;
      ta = tb;
    }
    for (Code j = 0; j < symbols; ++j) out.probs[j] = acc[j].value();
  }

  switch (tails) {
    case TailPolicy::kFold:
      out.probs[0] += out.lower_tail;
      out.probs[top & (symbols - 1)] += out.upper_tail;
      break;
    case TailPolicy::kRenormalize: {
      CompensatedSum in_range;
      for (double p : out.probs) in_range += p;
      const double mass = in_range.value();
      if (!(mass > 0.0)) {
        throw ConfigurationError(
            "no probability mass inside the ADC range; cannot renormalize");
      }
      for (double& p : out.probs) p /= mass;
      break;
    }
  }
  return out;
}

}  // namespace qrng
