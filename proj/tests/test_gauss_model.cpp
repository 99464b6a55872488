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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "qrng/error.hpp"
#include "qrng/gauss_model.hpp"

namespace qrng {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(NoiseModel, MeasuredAndQuantumAgree) {
  const NoiseModel a = NoiseModel::from_measured(5.0, 3.0);
  EXPECT_DOUBLE_EQ(a.sigma_q(), 4.0);
  const NoiseModel b = NoiseModel::from_quantum(4.0, 3.0);
  EXPECT_DOUBLE_EQ(b.sigma_m(), 5.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  for (int n = 0; n < 1000; ++n) {
    const double sq = u(rng);
    const double se = u(rng);
    const NoiseModel q = NoiseModel::from_quantum(sq, se);
    EXPECT_NEAR(q.sigma_q() * q.sigma_q() + q.sigma_e() * q.sigma_e(),
                q.sigma_m() * q.sigma_m(), 1e-12 * q.sigma_m() * q.sigma_m());
    const NoiseModel r = NoiseModel::from_measured(q.sigma_m(), q.sigma_e());
    EXPECT_NEAR(r.sigma_q(), sq, 1e-9 * q.sigma_m());
  }
}

TEST(NoiseModel, RejectsClassicalAboveMeasured) {
  EXPECT_THROW(NoiseModel::from_measured(1.0, 1.0), ModelError);
  EXPECT_THROW(NoiseModel::from_measured(1.0, 2.0), ModelError);
  EXPECT_THROW(NoiseModel::from_measured(1.0, -0.1), ModelError);
  EXPECT_THROW(NoiseModel::from_quantum(0.0, 0.1), ModelError);
}

TEST(NoiseModel, ScaledKeepsRatio) {
  const NoiseModel n = NoiseModel::from_quantum(2.0, 6.0).scaled(1e3);
  EXPECT_DOUBLE_EQ(n.sigma_q(), 2e3);
  EXPECT_DOUBLE_EQ(n.noise_ratio(), 3.0);
}

TEST(MarginalSigma, Examples) {
  EXPECT_DOUBLE_EQ(marginal_sigma(SourceSpec::vacuum()), std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(marginal_sigma(SourceSpec::thermal(1.0)), std::sqrt(1.5));
  EXPECT_EQ(marginal_sigma(SourceSpec::thermal(0.0)),
            marginal_sigma(SourceSpec::vacuum()));
  EXPECT_THROW(SourceSpec::thermal(-1.0), ParameterError);
}

TEST(IntervalProb, Examples) {
  EXPECT_NEAR(interval_prob(0, 1, 0, kInf), 0.5, 1e-15);
  EXPECT_NEAR(interval_prob(0, 1, -kInf, kInf), 1.0, 1e-15);
  EXPECT_NEAR(interval_prob(0, 1, -1, 1),
              oracle::quad_interval_prob(0, 1, -1, 1), 1e-14);
  EXPECT_NEAR(interval_prob(0, 1, -1, 1), 0.682689492137086, 1e-14);
}

TEST(IntervalProb, RejectsBadSigma) {
  EXPECT_THROW(interval_prob(0, 0, -1, 1), ParameterError);
  EXPECT_THROW(interval_prob(0, -1, -1, 1), ParameterError);
}

TEST(IntervalProb, MatchesQuadrature) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    const double sigma = std::exp(3.0 * u(rng));
    const double mu = 5.0 * sigma * u(rng);
    double lo = mu + 6.0 * sigma * u(rng);
    double hi = mu + 6.0 * sigma * u(rng);
    if (lo > hi) std::swap(lo, hi);
    EXPECT_NEAR(interval_prob(mu, sigma, lo, hi),
                oracle::quad_interval_prob(mu, sigma, lo, hi), 1e-12);
  }
}

TEST(IntervalProb, TranslationCovariance) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int n = 0; n < 500; ++n) {
    const double mu = u(rng);
    double lo = u(rng);
    double hi = u(rng);
    if (lo > hi) std::swap(lo, hi);
    EXPECT_NEAR(interval_prob(mu, 1.3, lo, hi),
                interval_prob(0.0, 1.3, lo - mu, hi - mu), 1e-15);
  }
}

TEST(IntervalProb, MonotoneInBounds) {
  double prev = 0.0;
  for (double hi = -3.0; hi <= 3.0; hi += 0.05) {
    const double p = interval_prob(0.2, 0.7, -3.5, hi);
    EXPECT_GT(p, prev);
    prev = p;
  }
  prev = 1.0;
  for (double lo = -3.0; lo <= 3.0; lo += 0.05) {
    const double p = interval_prob(0.2, 0.7, lo, 3.5);
    EXPECT_LT(p, prev);
    prev = p;
  }
}

TEST(CombProb, PartitionSumsToInRangeMass) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 60; ++n) {
    const int bits = std::uniform_int_distribution<int>(1, 10)(rng);
    const int m = std::uniform_int_distribution<int>(1, bits)(rng);
    const AdcConfig cfg(std::exp(2.0 * u(rng)), bits);
    const double sigma = cfg.alpha() * std::exp(2.0 * u(rng));
    const double mu = cfg.alpha() * 1.5 * u(rng);
    double total = 0.0;
    for (Code j = 0; j < (Code{1} << m); ++j) {
      total += comb_prob(mu, sigma, comb_for_output(cfg, m, j));
    }
    EXPECT_NEAR(total, interval_prob(mu, sigma, -cfg.alpha(), cfg.alpha()),
                1e-12);
    const double tails = interval_prob(mu, sigma, -kInf, -cfg.alpha()) +
                         interval_prob(mu, sigma, cfg.alpha(), kInf);
    EXPECT_NEAR(total + tails, 1.0, 1e-10);
  }
}

TEST(CombProb, MatchesRiemannOracle) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 40; ++n) {
    const int bits = std::uniform_int_distribution<int>(1, 8)(rng);
    const int m = std::uniform_int_distribution<int>(1, bits)(rng);
    const AdcConfig cfg(2.0 + u(rng), bits);
    const double sigma = std::max(cfg.alpha() * std::exp(u(rng)) / 3.0,
                                  cfg.precision() / 2.0);
    const double mu = cfg.alpha() * u(rng);
    const Code j = std::uniform_int_distribution<Code>(0, (Code{1} << m) - 1)(rng);
    EXPECT_NEAR(comb_prob(mu, sigma, comb_for_output(cfg, m, j)),
                oracle::riemann_comb_prob(mu, sigma, cfg.alpha(), bits, m, j),
                1e-8);
  }
}

TEST(CombProb, WideSignalGivesNearUniformCombs) {
  const AdcConfig cfg(1.0, 8);
  const int m = 3;
  const double sigma = 1e3;
  double in_range = interval_prob(0.0, sigma, -1.0, 1.0);
  for (Code j = 0; j < 8; ++j) {
    const double p = comb_prob(0.0, sigma, comb_for_output(cfg, m, j));
    EXPECT_NEAR(p / in_range, 1.0 / 8.0, 1e-9);
    EXPECT_NEAR(p, oracle::riemann_comb_prob(0.0, sigma, 1.0, 8, m, j), 1e-12);
  }
}

TEST(CombProb, FarMeanIsNegligible) {
  const AdcConfig cfg(3.0, 6);
  for (Code j = 0; j < 4; ++j) {
    EXPECT_LE(comb_prob(3.0 + 20.0, 1.0, comb_for_output(cfg, 2, j)), 1e-12);
  }
}

TEST(SymbolDistribution, FoldMatchesOracle) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    const int bits = std::uniform_int_distribution<int>(1, 10)(rng);
    const int m = std::uniform_int_distribution<int>(1, bits)(rng);
    const AdcConfig cfg(std::exp(u(rng)), bits);
    const double sigma = cfg.alpha() * std::exp(1.5 * u(rng));
    const double mu = 1.2 * cfg.alpha() * u(rng);
    const SymbolDistribution d =
        symbol_distribution(cfg, m, mu, sigma, TailPolicy::kFold);
    const auto want =
        oracle::folded_symbol_probs(mu, sigma, cfg.alpha(), bits, m);
    ASSERT_EQ(d.probs.size(), want.size());
    double total = 0.0;
    for (std::size_t j = 0; j < want.size(); ++j) {
      EXPECT_NEAR(d.probs[j], want[j], 1e-13);
      total += d.probs[j];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(SymbolDistribution, RenormalizeDropsTails) {
  const AdcConfig cfg(1.0, 4);
  const SymbolDistribution d =
      symbol_distribution(cfg, 2, 0.3, 2.0, TailPolicy::kRenormalize);
  double total = 0.0;
  for (Code j = 0; j < 4; ++j) {
    total += d.probs[j];
    EXPECT_NEAR(d.probs[j] * (1.0 - d.tail_mass()),
                comb_prob(0.3, 2.0, comb_for_output(cfg, 2, j)), 1e-14);
  }
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_NEAR(d.lower_tail, interval_prob(0.3, 2.0, -kInf, -1.0), 1e-15);
  EXPECT_THROW(
      symbol_distribution(cfg, 2, 1e6, 1e-3, TailPolicy::kRenormalize),
      ConfigurationError);
}

}  // namespace
}  // namespace qrng
