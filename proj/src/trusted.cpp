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

#include "qrng/trusted.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrng/error.hpp"
#include "qrng/parallel.hpp"

namespace qrng {
namespace {

double max_prob(const SymbolDistribution& d) {
  return *std::max_element(d.probs.begin(), d.probs.end());
}

// Maximizes F(e) = max_j Pr(output j | e) over e in [-E, E].
//
// The range and the tail folding are symmetric, so F(-e) = F(e) and only
// e >= 0 is searched. Away from the range edges F is also periodic in e
// with period delta: moving e by one cell relabels the combs. Half a
// period from the origin is scanned on a delta/20 grid and refined by
// golden section. The excursion endpoint and the stretch where the
// Gaussian meets the range edge are handled separately since periodicity
// breaks down there.
class OffsetSearch {
 public:
  OffsetSearch(const AdcConfig& cfg, int m, double sigma, TailPolicy tails,
               double excursion)
      : cfg_(cfg), m_(m), sigma_(sigma), tails_(tails), lim_(excursion) {}

  struct Point {
    double e = 0.0;
    double p = -1.0;
  };

  Point run() {
    const double delta = cfg_.precision();
    visit(0.0);
    if (lim_ == 0.0) return best_;

    window(0.0, std::min(lim_, 0.5 * delta), delta / 20.0);
    visit(lim_);
    window(std::max(0.0, lim_ - delta), lim_, delta / 20.0);

    const double reach = kEdgeSigmas * sigma_;
    edge_zone(cfg_.alpha() - reach, cfg_.alpha() + reach);
    return best_;
  }

 private:
  static constexpr double kEdgeSigmas = 12.0;
  static constexpr int kMaxCoarse = 400;

  double eval(double e) {
    return max_prob(symbol_distribution(cfg_, m_, e, sigma_, tails_));
  }

  double visit(double e) {
    const double p = eval(e);
    if (p > best_.p) best_ = {e, p};
    return p;
  }

  Point scan(double lo, double hi, double step) {
    Point local;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
    for (int i = 0; i <= n; ++i) {
      const double e = i == n ? hi : lo + (hi - lo) * i / n;
      const double p = visit(e);
      if (p > local.p) local = {e, p};
    }
    return local;
  }

  // Golden-section refinement of a grid maximum on [c - step, c + step].
  Point refine(Point c, double step, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = std::max(lo, c.e - step);
    double b = std::min(hi, c.e + step);
    const double tol = std::max(b - a, 0.0) * 1e-7;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = visit(x1);
    double f2 = visit(x2);
    Point local = c;
    auto keep = [&local](double e, double p) {
      if (p > local.p) local = {e, p};
    };
    keep(x1, f1);
    keep(x2, f2);
    while (b - a > tol) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = visit(x2);
        keep(x2, f2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = visit(x1);
        keep(x1, f1);
      }
    }
    const double mid = 0.5 * (a + b);
    keep(mid, visit(mid));
    return local;
  }

  void window(double lo, double hi, double step) {
    if (hi < lo) return;
    if (hi == lo) {
      visit(lo);
      return;
    }
    refine(scan(lo, hi, step), step, lo, hi);
  }

  // The Gaussian meets a range edge: a trend on the scale of sigma plus the
  // delta-periodic ripple. Coarse scan and golden section for the trend,
  // then one ripple period around the result.
  void edge_zone(double lo, double hi) {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, lim_);
    if (hi <= lo) return;
    const double delta = cfg_.precision();
    const double coarse =
        std::max(0.25 * sigma_, (hi - lo) / static_cast<double>(kMaxCoarse));
    const Point trend = scan(lo, hi, coarse);
    const Point peak = refine(trend, coarse, lo, hi);
    window(std::max(lo, peak.e - 0.5 * delta),
           std::min(hi, peak.e + 0.5 * delta),
           std::min(delta, sigma_) / 20.0);
  }

  AdcConfig cfg_;
  int m_;
  double sigma_;
  TailPolicy tails_;
  double lim_;
  Point best_;
};

double tail_mass_at(const AdcConfig& cfg, double mu, double sigma) {
  return interval_prob(mu, sigma, -INFINITY, -cfg.alpha()) +
         interval_prob(mu, sigma, cfg.alpha(), INFINITY);
}

}  // namespace

AdcConfig auto_range(int bits, const NoiseModel& noise, double margin_sigmas,
                     double excursion_sigmas) {
  if (!(margin_sigmas > 0.0) || !(excursion_sigmas >= 0.0)) {
    throw ParameterError("range margin must be positive");
  }
  return AdcConfig(excursion_sigmas * noise.sigma_e() +
                       margin_sigmas * noise.sigma_q(),
                   bits);
}

double min_entropy_unconditional(const AdcConfig& cfg, int m, double sigma_m,
                                 TailPolicy tails) {
  if (!(sigma_m > 0.0)) {
    throw ModelError("sigma_m must be positive");
  }
  return -std::log2(max_prob(symbol_distribution(cfg, m, 0.0, sigma_m, tails)));
}

TrustedReport min_entropy_worst_case(const AdcConfig& cfg, int m,
                                     const NoiseModel& noise,
                                     const TrustedOptions& options) {
  check_kept_bits(cfg, m);
  if (!(options.excursion_sigmas >= 0.0)) {
    throw ParameterError("excursion must be non-negative");
  }
  const double excursion = options.excursion_sigmas * noise.sigma_e();
  OffsetSearch search(cfg, m, noise.sigma_q(), options.tails, excursion);
  const OffsetSearch::Point worst = search.run();

  TrustedReport r;
  r.m = m;
  r.discarded = cfg.bits() - m;
  r.h_min = -std::log2(worst.p);
  r.h_min_uncond =
      min_entropy_unconditional(cfg, m, noise.sigma_m(), options.tails);
  r.rtbr = r.h_min / m;
  r.worst_e = worst.e;
  r.tail_mass = std::max(tail_mass_at(cfg, 0.0, noise.sigma_m()),
                         tail_mass_at(cfg, excursion, noise.sigma_q()));
  r.range_warning = r.tail_mass >= options.tail_guard;
  return r;
}

std::vector<TrustedReport> rtbr_curve(const AdcConfig& cfg,
                                      const NoiseModel& noise,
                                      const TrustedOptions& options) {
  std::vector<TrustedReport> out(static_cast<std::size_t>(cfg.bits()));
  parallel_for(
      out.size(),
      [&](std::size_t k) {
        out[k] = min_entropy_worst_case(cfg, cfg.bits() - static_cast<int>(k),
                                        noise, options);
      },
      options.threads);
  return out;
}

TruncationChoice optimal_truncation(std::span<const TrustedReport> curve,
                                    double tol) {
  if (curve.empty()) throw ParameterError("empty min-entropy curve");
  for (const TrustedReport& r : curve) {
    if (r.h_min >= r.m - tol) return {r.discarded, r.h_min, true};
  }
  return {curve.back().discarded, curve.back().h_min, false};
}

TruncationChoice optimal_truncation(const AdcConfig& cfg,
                                    const NoiseModel& noise,
                                    const TrustedOptions& options) {
  const auto curve = rtbr_curve(cfg, noise, options);
  return optimal_truncation(curve, options.crossing_tol);
}

std::vector<NoiseCurve> trusted_family(const FamilyConfig& config) {
  std::vector<NoiseCurve> curves;
  curves.reserve(config.noise_ratios.size());
  for (double ratio : config.noise_ratios) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
      throw ParameterError("noise ratios must be finite and non-negative");
    }
    const NoiseModel noise =
        NoiseModel::from_quantum(config.sigma_q, ratio * config.sigma_q);
    NoiseCurve c;
    c.noise_ratio = ratio;
    c.adc = config.alpha
                ? AdcConfig(*config.alpha, config.bits)
                : auto_range(config.bits, noise, config.margin_sigmas,
                             config.options.excursion_sigmas);
    c.reports.resize(static_cast<std::size_t>(config.bits));
    curves.push_back(std::move(c));
  }

  // Flattened over (curve, discarded) so that short curves do not idle
  // workers.
  const std::size_t per_curve = static_cast<std::size_t>(config.bits);
  parallel_for(
      curves.size() * per_curve,
      [&](std::size_t idx) {
        NoiseCurve& c = curves[idx / per_curve];
        const int k = static_cast<int>(idx % per_curve);
        const NoiseModel noise = NoiseModel::from_quantum(
            config.sigma_q, c.noise_ratio * config.sigma_q);
        c.reports[static_cast<std::size_t>(k)] = min_entropy_worst_case(
            c.adc, config.bits - k, noise, config.options);
      },
      config.options.threads);
  return curves;
}

}  // namespace qrng
