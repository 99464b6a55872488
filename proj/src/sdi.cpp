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

#include "qrng/sdi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "qrng/error.hpp"
#include "qrng/numeric.hpp"
#include "qrng/parallel.hpp"

namespace qrng {
namespace {

using Complex = std::complex<long double>;

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

// Reduces to (-pi, pi] in extended precision.
long double reduce_phase(long double x) {
  x = std::fmod(x, kTwoPi);
  if (x > kPi) x -= kTwoPi;
  if (x <= -kPi) x += kTwoPi;
  return x;
}

Complex unit(long double phase) {
  return {std::cos(phase), std::sin(phase)};
}

// Evaluates the double sum
//   sum_g sum_t exp(i c (j + 2^m g)(k + 2^s t)),  c = dx dp / hbar,
// with g < 2^(L-m) and t < 2^(N-s). The t-sum is a geometric series in
// the ratio exp(i c (j + 2^m g) 2^s), evaluated in closed form.
class OverlapKernel {
 public:
  explicit OverlapKernel(const EurParams& p)
      : c_(static_cast<long double>(p.x_cfg.precision()) *
           static_cast<long double>(p.p_cfg.precision()) /
           static_cast<long double>(p.hbar)),
        m_(p.m),
        s_(p.s),
        outer_(Code{1} << (p.x_cfg.bits() - p.m)),
        inner_(Code{1} << (p.p_cfg.bits() - p.s)) {}

  Code outer_terms() const { return outer_; }
  Code inner_terms() const { return inner_; }

  // Inner geometric sums for every g, for X comb j.
  void inner_sums(Code j, std::vector<Complex>& out) const {
    out.resize(outer_);
    for (Code g = 0; g < outer_; ++g) out[g] = geometric(x_pos(j, g));
  }

  long double magnitude(Code j, Code k,
                        const std::vector<Complex>& inner) const {
    Complex total{0.0L, 0.0L};
    for (Code g = 0; g < outer_; ++g) {
      total += unit(phase(x_pos(j, g) * k)) * inner[g];
    }
    return std::abs(total);
  }

  // sum_g |inner_g|, an upper bound on magnitude(j, k, .) for every k.
  static long double bound(const std::vector<Complex>& inner) {
    long double b = 0.0L;
    for (const Complex& z : inner) b += std::abs(z);
    return b;
  }

 private:
  Code x_pos(Code j, Code g) const { return j + (g << m_); }

  long double phase(Code n) const {
    return reduce_phase(c_ * static_cast<long double>(n));
  }

  Complex geometric(Code x) const {
    if (inner_ == 1) return {1.0L, 0.0L};
    const long double phi = phase(x << s_);
    const long double half_sin = std::sin(0.5L * phi);
    if (std::abs(2.0L * half_sin) < 1e-12L) {
      Complex sum{0.0L, 0.0L};
      for (Code t = 0; t < inner_; ++t) sum += unit(phase((x << s_) * t));
      return sum;
    }
    const auto terms = static_cast<long double>(inner_);
    const long double amp = std::sin(0.5L * terms * phi) / half_sin;
    return unit(0.5L * phi * (terms - 1.0L)) * amp;
  }

  long double c_;
  int m_;
  int s_;
  Code outer_;
  Code inner_;
};

double single_term_norm(double hbar) {
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * hbar);
}

}  // namespace

double energy_test_gamma(double alpha, double transmittance,
                         double threshold) {
  if (!(transmittance > 0.5 && transmittance <= 1.0)) {
    throw ParameterError("energy test transmittance must lie in (1/2, 1]");
  }
  if (!(threshold > 0.0)) {
    throw ParameterError("energy test threshold must be positive");
  }
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  const double T = transmittance;
  const double lambda = std::pow((2.0 * T - 1.0) / T, 2);
  const double mu = std::sqrt((1.0 - T) / (2.0 * T));
  const double prefactor =
      0.5 * (std::sqrt(1.0 + lambda) + std::sqrt(1.0 + 1.0 / lambda));
  const double gap = mu * alpha - threshold;
  const double g =
      prefactor * std::exp(-gap * gap / (0.5 * T * (1.0 + lambda)));
  return std::clamp(g, 0.0, 1.0);
}

double energy_test_smoothness(std::uint64_t runs, double gamma,
                              double p_pass) {
  if (!(p_pass > 0.0 && p_pass <= 1.0)) {
    throw ParameterError("pass probability must lie in (0, 1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ParameterError("gamma must lie in [0, 1]");
  }
  return std::sqrt(2.0 * static_cast<double>(runs) * gamma / p_pass);
}

void EurParams::validate() const {
  check_kept_bits(x_cfg, m);
  check_kept_bits(p_cfg, s);
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw ParameterError("hbar must be finite and positive");
  }
  if (x_cfg.bits() + p_cfg.bits() > 60) {
    throw ParameterError("combined X and P resolution above 60 bits");
  }
  if (!(energy.transmittance > 0.5 && energy.transmittance <= 1.0)) {
    throw ParameterError("energy test transmittance must lie in (1/2, 1]");
  }
}

double overlap_u(Code j, Code k, const EurParams& params) {
  params.validate();
  if (j >= (Code{1} << params.m) || k >= (Code{1} << params.s)) {
    throw ParameterError("overlap indices outside the LSB alphabets");
  }
  const OverlapKernel kernel(params);
  std::vector<Complex> inner;
  kernel.inner_sums(j, inner);
  return static_cast<double>(kernel.magnitude(j, k, inner)) *
         single_term_norm(params.hbar);
}

OverlapMax c_infinity(const EurParams& params) {
  params.validate();
  const OverlapKernel kernel(params);
  const double norm = single_term_norm(params.hbar);
  const Code x_symbols = Code{1} << params.m;
  const Code p_symbols = Code{1} << params.s;

  if (kernel.outer_terms() == 1 && kernel.inner_terms() == 1) {
    return {1.0 / (2.0 * std::numbers::pi * params.hbar), 0, 0};
  }

  long double best = -1.0L;
  Code best_j = 0;
  Code best_k = 0;
  std::vector<Complex> inner;
  auto scan_k = [&](Code j) {
    kernel.inner_sums(j, inner);
    for (Code k = 0; k < p_symbols; ++k) {
      const long double v = kernel.magnitude(j, k, inner);
      if (v > best || (v == best && (j < best_j || (j == best_j && k < best_k)))) {
        best = v;
        best_j = j;
        best_k = k;
      }
    }
  };

  if (kernel.inner_terms() == 1) {
    // |U| does not depend on j.
    scan_k(0);
  } else if (kernel.outer_terms() == 1) {
    // |U| does not depend on k.
    for (Code j = 0; j < x_symbols; ++j) {
      kernel.inner_sums(j, inner);
      const long double v = kernel.magnitude(j, 0, inner);
      if (v > best) {
        best = v;
        best_j = j;
      }
    }
  } else {
    // Branch and bound over j, most promising first.
    std::vector<long double> bounds(x_symbols);
    for (Code j = 0; j < x_symbols; ++j) {
      kernel.inner_sums(j, inner);
      bounds[j] = OverlapKernel::bound(inner);
    }
    std::vector<Code> order(x_symbols);
    std::iota(order.begin(), order.end(), Code{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Code a, Code b) { return bounds[a] > bounds[b]; });
    for (Code j : order) {
      if (bounds[j] * (1.0L + 1e-12L) < best) break;
      scan_k(j);
    }
  }
  const double u = static_cast<double>(best) * norm;
  return {u * u, best_j, best_k};
}

MaxEntropyCheck h_max_check(const SourceSpec& source, const AdcConfig& p_cfg,
                            int s) {
  const SymbolDistribution d = symbol_distribution(
      p_cfg, s, 0.0, marginal_sigma(source), TailPolicy::kRenormalize);
  CompensatedSum root_sum;
  for (double q : d.probs) root_sum += std::sqrt(q);
  MaxEntropyCheck out;
  out.bits = 2.0 * std::log2(root_sum.value());
  out.clipped_mass = d.tail_mass();
  out.guard_breached = out.clipped_mass >= kClippedMassGuard;
  return out;
}

std::string_view mode_name(PostprocessMode mode) {
  switch (mode) {
    case PostprocessMode::kRaw:
      return "1";
    case PostprocessMode::kLsbX:
      return "2";
    case PostprocessMode::kLsbXP:
      return "3";
    case PostprocessMode::kCustom:
      break;
  }
  return "custom";
}

SdiReport eur_bound(EurParams params, const SourceSpec& source,
                    PostprocessMode mode) {
  const int L = params.x_cfg.bits();
  const int N = params.p_cfg.bits();
  switch (mode) {
    case PostprocessMode::kRaw:
      params.m = L;
      params.s = N;
      break;
    case PostprocessMode::kLsbX:
      params.m = L - 1;
      params.s = N;
      break;
    case PostprocessMode::kLsbXP:
      params.m = L - 1;
      params.s = N - 1;
      break;
    case PostprocessMode::kCustom:
      break;
  }
  params.validate();

  SdiReport r;
  r.resolution = L;
  r.mode = mode;
  r.m = params.m;
  r.s = params.s;

  const OverlapMax ov = c_infinity(params);
  r.c_inf = ov.c_inf;
  r.argmax_j = ov.j;
  r.argmax_k = ov.k;
  r.c_lsbs = ov.c_inf * params.x_cfg.precision() * params.p_cfg.precision();
  r.neg_log2_c = -std::log2(r.c_lsbs);

  const MaxEntropyCheck hm = h_max_check(source, params.p_cfg, params.s);
  r.h_max_p = hm.bits;
  r.clipped_guard = hm.guard_breached;

  const double raw = r.neg_log2_c - r.h_max_p;
  r.clamped = raw < 0.0;
  r.extractable = r.clamped ? 0.0 : raw;

  const EnergyTest& et = params.energy;
  r.ledger.gamma = energy_test_gamma(params.x_cfg.alpha(), et.transmittance,
                                     et.threshold);
  r.ledger.eps_tilde = energy_test_smoothness(et.runs, r.ledger.gamma, et.p_pass);
  r.ledger.eps = (params.eps1 - params.eps_s) / (2.0 * et.p_pass) -
                 2.0 * r.ledger.eps_tilde;
  return r;
}

std::vector<SdiReport> sdi_curve(std::span<const int> resolutions,
                                 const SourceSpec& source,
                                 PostprocessMode mode,
                                 const SdiCurveConfig& config) {
  std::vector<SdiReport> out(resolutions.size());
  const double alpha_p = config.alpha_p > 0.0 ? config.alpha_p : config.alpha;
  parallel_for(
      resolutions.size(),
      [&](std::size_t i) {
        const int bits = resolutions[i];
        EurParams p{AdcConfig(config.alpha, bits), AdcConfig(alpha_p, bits),
                    bits, bits, config.hbar, config.energy, config.eps1,
                    config.eps_s};
        out[i] = eur_bound(p, source, mode);
      },
      config.threads);
  return out;
}

}  // namespace qrng
