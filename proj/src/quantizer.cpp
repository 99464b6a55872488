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

#include "qrng/quantizer.hpp"

#include <cmath>
#include <string>

#include "qrng/error.hpp"

namespace qrng {

AdcConfig::AdcConfig(double alpha, int bits) : alpha_(alpha), bits_(bits) {
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw ParameterError("ADC range alpha must be finite and positive");
  }
  if (bits < 1 || bits > kMaxBits) {
    throw ParameterError("ADC resolution must lie in [1, " +
                         std::to_string(kMaxBits) + "] bits, got " +
                         std::to_string(bits));
  }
}

double AdcConfig::precision() const { return std::ldexp(2.0 * alpha_, -bits_); }

Interval AdcConfig::interval_bounds(Code i) const {
  if (i >= levels()) {
    throw ParameterError("ADC cell index " + std::to_string(i) +
                         " out of range");
  }
  const double delta = precision();
  // Both ends use the same expression so neighbouring cells share endpoints.
  const double lo = -alpha_ + static_cast<double>(i) * delta;
  const double hi = -alpha_ + static_cast<double>(i + 1) * delta;
  return {lo, hi};
}

CodeSample quantize(double x, const AdcConfig& cfg) {
  if (!std::isfinite(x)) {
    throw InputError("cannot quantize a non-finite value");
  }
  const double alpha = cfg.alpha();
  const Code top = cfg.levels() - 1;
  if (x <= -alpha) return {0, true};
  if (x > alpha) return {top, true};

  const double pos = std::ceil((x + alpha) / cfg.precision()) - 1.0;
  Code i = pos <= 0.0 ? 0 : static_cast<Code>(pos);
  if (i > top) i = top;
  // Rounding in (x + alpha) / delta can land one cell off; settle against
  // the stored endpoints.
  while (i > 0 && x <= cfg.interval_bounds(i).lo) --i;
  while (i < top && x > cfg.interval_bounds(i).hi) ++i;
  return {i, false};
}

Code lsb_extract(Code code, int m) {
  if (m < 1 || m > 63) {
    throw ParameterError("kept bit count m must lie in [1, 63], got " +
                         std::to_string(m));
  }
  return code & ((Code{1} << m) - 1);
}

void check_kept_bits(const AdcConfig& cfg, int m) {
  if (m < 1 || m > cfg.bits()) {
    throw ParameterError("kept bit count m must lie in [1, " +
                         std::to_string(cfg.bits()) + "], got " +
                         std::to_string(m));
  }
}

Code lsb_extract(Code code, int m, const AdcConfig& cfg) {
  check_kept_bits(cfg, m);
  if (code >= cfg.levels()) {
    throw ParameterError("code " + std::to_string(code) +
                         " exceeds the ADC alphabet");
  }
  return lsb_extract(code, m);
}

CombSet::CombSet(const AdcConfig& cfg, int m, Code offset)
    : cfg_(cfg), m_(m), offset_(offset) {
  check_kept_bits(cfg, m);
  if (offset >= stride()) {
    throw ParameterError("comb offset " + std::to_string(offset) +
                         " must be below 2^m = " + std::to_string(stride()));
  }
}

bool CombSet::contains(double x) const {
  const CodeSample s = quantize(x, cfg_);
  return !s.clipped && lsb_extract(s.code, m_) == offset_;
}

CombSet comb_for_output(const AdcConfig& cfg, int m, Code j) {
  return CombSet(cfg, m, j);
}

}  // namespace qrng
