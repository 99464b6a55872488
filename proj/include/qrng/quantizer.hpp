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

#ifndef QRNG_QUANTIZER_HPP_
#define QRNG_QUANTIZER_HPP_

#include <cstdint>

namespace qrng {

using Code = std::uint64_t;

// Half-open interval (lo, hi].
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return lo < x && x <= hi; }
};

// A uniform ADC with sampling range (-alpha, alpha] and `bits` bits of
// resolution. Cell i covers (-alpha + i*delta, -alpha + (i+1)*delta].
class AdcConfig {
 public:
  static constexpr int kMaxBits = 30;

  AdcConfig(double alpha, int bits);

  double alpha() const { return alpha_; }
  int bits() const { return bits_; }
  // delta = 2*alpha / 2^bits. Scaling by a power of two is exact.
  double precision() const;
  Code levels() const { return Code{1} << bits_; }

  Interval interval_bounds(Code i) const;

  friend bool operator==(const AdcConfig&, const AdcConfig&) = default;

 private:
  double alpha_;
  int bits_;
};

struct CodeSample {
  Code code;
  bool clipped;  // value fell outside (-alpha, alpha]

  friend bool operator==(const CodeSample&, const CodeSample&) = default;
};

CodeSample quantize(double x, const AdcConfig& cfg);

// code mod 2^m. Requires 1 <= m <= 63.
Code lsb_extract(Code code, int m);
// As above, additionally checking m <= bits and code < 2^bits.
Code lsb_extract(Code code, int m, const AdcConfig& cfg);

// The cells whose code is congruent to `offset` modulo 2^m: the region of
// the input axis that produces m-LSB output `offset`.
class CombSet {
 public:
  CombSet(const AdcConfig& cfg, int m, Code offset);

  const AdcConfig& adc() const { return cfg_; }
  int kept_bits() const { return m_; }
  Code offset() const { return offset_; }
  Code stride() const { return Code{1} << m_; }
  Code teeth() const { return Code{1} << (cfg_.bits() - m_); }
  double tooth_width() const { return cfg_.precision(); }

  // ADC code of tooth t, t in [0, teeth()).
  Code tooth_code(Code t) const { return offset_ + stride() * t; }
  Interval tooth(Code t) const { return cfg_.interval_bounds(tooth_code(t)); }

  bool contains(double x) const;

 private:
  AdcConfig cfg_;
  int m_;
  Code offset_;
};

CombSet comb_for_output(const AdcConfig& cfg, int m, Code j);

// Throws ParameterError unless 1 <= m <= cfg.bits().
void check_kept_bits(const AdcConfig& cfg, int m);

}  // namespace qrng

#endif  // QRNG_QUANTIZER_HPP_
