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
#include <set>
#include <vector>

#include "qrng/error.hpp"
#include "qrng/quantizer.hpp"

namespace qrng {
namespace {

TEST(AdcConfig, PrecisionIsRangeOverLevels) {
  const AdcConfig cfg(4.0, 3);
  EXPECT_EQ(cfg.precision(), 1.0);
  EXPECT_EQ(cfg.levels(), 8u);
  for (int bits = 1; bits <= AdcConfig::kMaxBits; ++bits) {
    const AdcConfig c(3.7, bits);
    EXPECT_DOUBLE_EQ(c.precision(), 2.0 * 3.7 / std::pow(2.0, bits));
  }
}

TEST(AdcConfig, RejectsBadParameters) {
  EXPECT_THROW(AdcConfig(0.0, 4), ParameterError);
  EXPECT_THROW(AdcConfig(-1.0, 4), ParameterError);
  EXPECT_THROW(AdcConfig(std::numeric_limits<double>::infinity(), 4),
               ParameterError);
  EXPECT_THROW(AdcConfig(1.0, 0), ParameterError);
  EXPECT_THROW(AdcConfig(1.0, AdcConfig::kMaxBits + 1), ParameterError);
  EXPECT_THROW(AdcConfig(1.0, 3).interval_bounds(8), ParameterError);
}

TEST(AdcConfig, IntervalsTileTheRange) {
  for (int bits : {1, 3, 7, 12}) {
    const AdcConfig cfg(2.5, bits);
    EXPECT_EQ(cfg.interval_bounds(0).lo, -2.5);
    EXPECT_EQ(cfg.interval_bounds(cfg.levels() - 1).hi, 2.5);
    for (Code i = 0; i + 1 < cfg.levels(); ++i) {
      const Interval a = cfg.interval_bounds(i);
      EXPECT_LT(a.lo, a.hi);
      EXPECT_EQ(a.hi, cfg.interval_bounds(i + 1).lo);
    }
  }
}

TEST(Quantize, Examples) {
  const AdcConfig cfg(4.0, 3);
  EXPECT_EQ(quantize(-3.2, cfg), (CodeSample{0, false}));
  EXPECT_EQ(quantize(5.0, cfg), (CodeSample{7, true}));
  EXPECT_EQ(quantize(-4.0, cfg), (CodeSample{0, true}));
  EXPECT_EQ(quantize(4.0, cfg), (CodeSample{7, false}));
  EXPECT_EQ(quantize(-3.0, cfg), (CodeSample{0, false}));
  EXPECT_EQ(quantize(-2.999, cfg), (CodeSample{1, false}));
  EXPECT_EQ(quantize(0.0, cfg), (CodeSample{3, false}));
}

TEST(Quantize, RejectsNonFinite) {
  const AdcConfig cfg(4.0, 3);
  EXPECT_THROW(quantize(std::nan(""), cfg), InputError);
  EXPECT_THROW(quantize(std::numeric_limits<double>::infinity(), cfg),
               InputError);
}

TEST(Quantize, ClippedCarriesEdgeCode) {
  const AdcConfig cfg(1.5, 5);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int n = 0; n < 20000; ++n) {
    const CodeSample s = quantize(u(rng), cfg);
    if (s.clipped) EXPECT_TRUE(s.code == 0 || s.code == cfg.levels() - 1);
  }
}

TEST(Quantize, AgreesWithIntervalBounds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const AdcConfig cfg(std::uniform_real_distribution<double>(0.1, 50.0)(rng),
                        std::uniform_int_distribution<int>(1, 20)(rng));
    std::uniform_real_distribution<double> u(-cfg.alpha(), cfg.alpha());
    for (int n = 0; n < 2000; ++n) {
      const double x = u(rng);
      const CodeSample s = quantize(x, cfg);
      if (s.clipped) continue;
      EXPECT_TRUE(cfg.interval_bounds(s.code).contains(x));
    }
    // endpoints belong to the cell below
    for (Code i = 0; i < std::min<Code>(cfg.levels(), 64); ++i) {
      EXPECT_EQ(quantize(cfg.interval_bounds(i).hi, cfg).code, i);
    }
  }
}

TEST(Quantize, SweepVisitsEveryCodeOncePerCell) {
  const AdcConfig cfg(2.0, 6);
  const int per_cell = 7;
  std::vector<int> counts(cfg.levels(), 0);
  for (Code i = 0; i < cfg.levels(); ++i) {
    const Interval b = cfg.interval_bounds(i);
    for (int p = 1; p <= per_cell; ++p) {
      const double x = b.lo + (b.hi - b.lo) * p / (per_cell + 1.0);
      ++counts[quantize(x, cfg).code];
    }
  }
  for (int c : counts) EXPECT_EQ(c, per_cell);
}

TEST(LsbExtract, Examples) {
  EXPECT_EQ(lsb_extract(6, 2), 2u);
  EXPECT_EQ(lsb_extract(6, 3, AdcConfig(4.0, 3)), 6u);
  EXPECT_EQ(lsb_extract(5, 2), 1u);
}

TEST(LsbExtract, RejectsBadM) {
  EXPECT_THROW(lsb_extract(5, 0), ParameterError);
  EXPECT_THROW(lsb_extract(5, 64), ParameterError);
  const AdcConfig cfg(4.0, 3);
  EXPECT_THROW(lsb_extract(5, 4, cfg), ParameterError);
  EXPECT_THROW(lsb_extract(8, 2, cfg), ParameterError);
}

TEST(LsbExtract, Idempotent) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 5000; ++n) {
    const Code c = rng();
    const int m = std::uniform_int_distribution<int>(1, 63)(rng);
    EXPECT_EQ(lsb_extract(lsb_extract(c, m), m), lsb_extract(c, m));
    EXPECT_EQ(lsb_extract(c, m), c % (Code{1} << m));
  }
}

std::set<Code> tooth_codes(const CombSet& comb) {
  std::set<Code> out;
  for (Code t = 0; t < comb.teeth(); ++t) out.insert(comb.tooth_code(t));
  return out;
}

TEST(CombSet, Examples) {
  const AdcConfig cfg(4.0, 3);
  EXPECT_EQ(tooth_codes(comb_for_output(cfg, 2, 1)), (std::set<Code>{1, 5}));
  EXPECT_EQ(tooth_codes(comb_for_output(cfg, 3, 4)), (std::set<Code>{4}));
  EXPECT_EQ(tooth_codes(comb_for_output(cfg, 1, 0)),
            (std::set<Code>{0, 2, 4, 6}));
  const CombSet c = comb_for_output(cfg, 2, 1);
  EXPECT_EQ(c.tooth(0).lo, -3.0);
  EXPECT_EQ(c.tooth(1).lo, 1.0);
  EXPECT_EQ(c.tooth_width(), 1.0);
}

TEST(CombSet, RejectsBadArguments) {
  const AdcConfig cfg(4.0, 3);
  EXPECT_THROW(comb_for_output(cfg, 2, 4), ParameterError);
  EXPECT_THROW(comb_for_output(cfg, 0, 0), ParameterError);
  EXPECT_THROW(comb_for_output(cfg, 4, 0), ParameterError);
}

TEST(CombSet, CombsPartitionTheRange) {
  for (int bits = 1; bits <= 9; ++bits) {
    const AdcConfig cfg(1.25, bits);
    for (int m = 1; m <= bits; ++m) {
      std::vector<int> owner(cfg.levels(), 0);
      for (Code j = 0; j < (Code{1} << m); ++j) {
        const CombSet comb = comb_for_output(cfg, m, j);
        EXPECT_EQ(comb.teeth() * comb.stride(), cfg.levels());
        for (Code t = 0; t < comb.teeth(); ++t) {
          ++owner[comb.tooth_code(t)];
          const Interval tooth = comb.tooth(t);
          EXPECT_EQ(tooth.lo, cfg.interval_bounds(comb.tooth_code(t)).lo);
          EXPECT_EQ(tooth.hi, cfg.interval_bounds(comb.tooth_code(t)).hi);
          EXPECT_GE(tooth.lo, -cfg.alpha());
          EXPECT_LE(tooth.hi, cfg.alpha());
          if (t > 0) EXPECT_LE(comb.tooth(t - 1).hi, tooth.lo);
        }
      }
      for (int o : owner) EXPECT_EQ(o, 1);
    }
  }
}

TEST(CombSet, MembershipMatchesExtraction) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int bits = std::uniform_int_distribution<int>(1, 12)(rng);
    const int m = std::uniform_int_distribution<int>(1, bits)(rng);
    const AdcConfig cfg(std::uniform_real_distribution<double>(0.5, 8.0)(rng),
                        bits);
    std::uniform_real_distribution<double> u(-cfg.alpha(), cfg.alpha());
    for (int n = 0; n < 500; ++n) {
      const double x = u(rng);
      const CodeSample s = quantize(x, cfg);
      if (s.clipped) continue;
      const Code j = lsb_extract(s.code, m);
      for (Code k = 0; k < (Code{1} << m); ++k) {
        EXPECT_EQ(comb_for_output(cfg, m, k).contains(x), k == j);
      }
    }
  }
}

}  // namespace
}  // namespace qrng
