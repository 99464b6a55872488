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

// Reference implementations used only by the tests. Nothing here calls into
// the library's numerical paths; they are deliberately slow and direct.

#ifndef QRNG_TESTS_ORACLES_HPP_
#define QRNG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

inline double gauss_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a,
                           double fa, double b, double fb, double m, double fm,
                           double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature on a finite interval.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-14,
                               int max_depth = 50) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// Gaussian mass on (lo, hi] by quadrature. Infinite bounds are cut at 40
// sigma, and the range is split so the adaptive scheme never sees a
// near-zero integrand across a huge interval.
inline double quad_interval_prob(double mu, double sigma, double lo, double hi) {
  const double cut = 40.0 * sigma;
  lo = std::max(lo, mu - cut);
  hi = std::min(hi, mu + cut);
  if (!(hi > lo)) return 0.0;
  const auto f = [&](double x) { return gauss_pdf(x, mu, sigma); };
  const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / sigma)));
  const double w = (hi - lo) / pieces;
  double total = 0.0;
  for (int p = 0; p < pieces; ++p) {
    total += adaptive_simpson(f, lo + p * w, lo + (p + 1) * w, 1e-16);
  }
  return total;
}

// Composite Simpson sum over the teeth of the comb j: cells i with
// i mod 2^m == j, cell i = (-alpha + i delta, -alpha + (i + 1) delta].
inline double riemann_comb_prob(double mu, double sigma, double alpha, int bits,
                                int m, std::uint64_t j, int points = 400) {
  const double delta = 2.0 * alpha / std::pow(2.0, bits);
  const std::uint64_t levels = std::uint64_t{1} << bits;
  double total = 0.0;
  for (std::uint64_t i = j; i < levels; i += std::uint64_t{1} << m) {
    const double a = -alpha + static_cast<double>(i) * delta;
    const double h = delta / points;
    double s = gauss_pdf(a, mu, sigma) + gauss_pdf(a + delta, mu, sigma);
    for (int p = 1; p < points; ++p) {
      s += (p % 2 ? 4.0 : 2.0) * gauss_pdf(a + p * h, mu, sigma);
    }
    total += s * h / 3.0;
  }
  return total;
}

// Per-output probabilities with the out-of-range mass folded into the edge
// codes, evaluated cell by cell from std::erfc.
inline std::vector<double> folded_symbol_probs(double mu, double sigma,
                                               double alpha, int bits, int m) {
  const std::uint64_t levels = std::uint64_t{1} << bits;
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const double delta = 2.0 * alpha / static_cast<double>(levels);
  const auto cdf = [&](double x) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::numbers::sqrt2));
  };
  const auto sf = [&](double x) {
    return 0.5 * std::erfc((x - mu) / (sigma * std::numbers::sqrt2));
  };
  std::vector<double> p(mask + 1, 0.0);
  for (std::uint64_t i = 0; i < levels; ++i) {
    const double lo = -alpha + static_cast<double>(i) * delta;
    const double hi = lo + delta;
    // pick the side with the smaller tail to keep precision
    const double mass = (lo + hi) / 2.0 < mu ? cdf(hi) - cdf(lo)
                                             : sf(lo) - sf(hi);
    p[i & mask] += std::max(mass, 0.0);
  }
  p[0] += cdf(-alpha);
  p[(levels - 1) & mask] += sf(alpha);
  return p;
}

inline double max_of(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

// Worst-case min-entropy over e in [-excursion, excursion] on a dense grid.
inline double dense_worst_case_h(double alpha, int bits, int m, double sigma_q,
                                 double excursion, double step) {
  double worst = 0.0;
  const long n = static_cast<long>(std::ceil(excursion / step));
  for (long i = -n; i <= n; ++i) {
    const double e = std::clamp(static_cast<double>(i) * step, -excursion,
                                excursion);
    worst = std::max(worst,
                     max_of(folded_symbol_probs(e, sigma_q, alpha, bits, m)));
  }
  return -std::log2(worst);
}

// |U_{j,k}| by direct double summation.
inline double naive_overlap_u(std::uint64_t j, std::uint64_t k, int bits_x,
                              int m, int bits_p, int s, double delta_x,
                              double delta_p, double hbar) {
  const long double c = static_cast<long double>(delta_x) * delta_p / hbar;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::complex<long double> sum = 0.0L;
  const std::uint64_t gs = std::uint64_t{1} << (bits_x - m);
  const std::uint64_t ts = std::uint64_t{1} << (bits_p - s);
  for (std::uint64_t g = 0; g < gs; ++g) {
    for (std::uint64_t t = 0; t < ts; ++t) {
      const std::uint64_t a = j + (g << m);
      const std::uint64_t b = k + (t << s);
      const long double phase =
          std::fmod(static_cast<long double>(a) * static_cast<long double>(b) *
                        c,
                    two_pi);
      sum += std::polar(1.0L, phase);
    }
  }
  return static_cast<double>(std::abs(sum) /
                             std::sqrt(two_pi * static_cast<long double>(hbar)));
}

struct ScanMax {
  double c_inf = 0.0;
  std::uint64_t j = 0;
  std::uint64_t k = 0;
};

// Supremum of |U|^2 over every (j, k), scanned j-major with ties kept first.
inline ScanMax exhaustive_c_inf(int bits_x, int m, int bits_p, int s,
                                double delta_x, double delta_p, double hbar) {
  ScanMax best;
  best.c_inf = -1.0;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j) {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << s); ++k) {
      const double u =
          naive_overlap_u(j, k, bits_x, m, bits_p, s, delta_x, delta_p, hbar);
      if (u * u > best.c_inf) best = {u * u, j, k};
    }
  }
  return best;
}

// Energy-test bound written out term by term.
inline double energy_gamma(double alpha, double t, double threshold) {
  const double ratio = (2.0 * t - 1.0) / t;
  const double lambda = ratio * ratio;
  const double mu = std::sqrt((1.0 - t) / (2.0 * t));
  const double prefactor =
      0.5 * (std::sqrt(1.0 + lambda) + std::sqrt(1.0 + 1.0 / lambda));
  const double gap = mu * alpha - threshold;
  const double denom = t * (1.0 + lambda) / 2.0;
  return std::clamp(prefactor * std::exp(-(gap * gap) / denom), 0.0, 1.0);
}

// Renyi-1/2 entropy of the renormalized comb distribution, via quadrature.
inline double hmax_quadrature(double sigma, double alpha, int bits, int s) {
  const std::uint64_t levels = std::uint64_t{1} << bits;
  const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  const double delta = 2.0 * alpha / static_cast<double>(levels);
  std::vector<double> q(mask + 1, 0.0);
  const auto f = [&](double x) { return gauss_pdf(x, 0.0, sigma); };
  double total = 0.0;
  for (std::uint64_t i = 0; i < levels; ++i) {
    const double lo = -alpha + static_cast<double>(i) * delta;
    const double mass = adaptive_simpson(f, lo, lo + delta, 1e-18);
    q[i & mask] += mass;
    total += mass;
  }
  double root_sum = 0.0;
  for (double v : q) root_sum += std::sqrt(v / total);
  return 2.0 * std::log2(root_sum);
}

// Best guessing probability by enumerating every map e -> guess.
// joint is row-major [x][e].
inline double brute_force_p_guess(const std::vector<double>& joint,
                                  std::size_t nx, std::size_t ne) {
  std::vector<std::size_t> guess(ne, 0);
  double best = 0.0;
  while (true) {
    double p = 0.0;
    for (std::size_t e = 0; e < ne; ++e) p += joint[guess[e] * ne + e];
    best = std::max(best, p);
    std::size_t d = 0;
    while (d < ne && ++guess[d] == nx) guess[d++] = 0;
    if (d == ne) break;
  }
  return best;
}

}  // namespace oracle

#endif  // QRNG_TESTS_ORACLES_HPP_
