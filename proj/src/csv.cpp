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

#include "qrng/csv.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qrng {

void RunManifest::write(std::ostream& os) const {
  os << "# " << kToolName << ' ' << kToolVersion << '\n';
  os << "# subcommand: " << subcommand << '\n';
  if (seed) os << "# seed: " << *seed << '\n';
  for (const auto& [name, value] : params) {
    os << "# param " << name << " = " << value << '\n';
  }
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  std::ostringstream ss;
  ss << std::setprecision(12) << x;
  return ss.str();
}

void write_trusted_csv(std::ostream& os, std::span<const NoiseCurve> curves) {
  os << kTrustedCurveHeader << '\n';
  for (const NoiseCurve& c : curves) {
    for (const TrustedReport& r : c.reports) {
      os << format_number(c.noise_ratio) << ',' << r.discarded << ',' << r.m
         << ',' << format_number(r.h_min) << ','
         << format_number(r.h_min_uncond) << ',' << format_number(r.rtbr)
         << ',' << format_number(r.worst_e) << '\n';
    }
  }
}

void write_minentropy_csv(std::ostream& os, std::span<const NoiseCurve> curves,
                          double tol) {
  os << kMinEntropyHeader << '\n';
  for (const NoiseCurve& c : curves) {
    const TruncationChoice pick = optimal_truncation(c.reports, tol);
    for (const TrustedReport& r : c.reports) {
      const bool crossing = pick.crossed && r.discarded == pick.discarded;
      os << format_number(c.noise_ratio) << ',' << r.discarded << ',' << r.m
         << ',' << format_number(r.h_min) << ',' << r.m << ','
         << (crossing ? 1 : 0) << '\n';
    }
  }
}

void write_sdi_csv(std::ostream& os, std::span<const SdiReport> reports,
                   std::string_view source_label) {
  os << kSdiHeader << '\n';
  for (const SdiReport& r : reports) {
    os << r.resolution << ',' << mode_name(r.mode) << ',' << source_label
       << ',' << format_number(r.c_lsbs) << ',' << format_number(r.h_max_p)
       << ',' << format_number(r.extractable) << '\n';
  }
}

void write_intervals_csv(std::ostream& os, const AdcConfig& cfg, int m,
                         std::optional<Code> j) {
  os << kIntervalsHeader << '\n';
  const Code first = j.value_or(0);
  const Code last = j ? *j + 1 : (Code{1} << m);
  for (Code offset = first; offset < last; ++offset) {
    const CombSet comb = comb_for_output(cfg, m, offset);
    for (Code t = 0; t < comb.teeth(); ++t) {
      const Interval iv = comb.tooth(t);
      os << offset << ',' << comb.tooth_code(t) << ',' << format_number(iv.lo)
         << ',' << format_number(iv.hi) << '\n';
    }
  }
}

void write_histogram_csv(std::ostream& os, const SimResult& sim,
                         std::span<const double> analytic, const ZReport& z) {
  os << kHistogramHeader << '\n';
  const double n = static_cast<double>(sim.n_samples);
  for (std::size_t j = 0; j < sim.histogram.size(); ++j) {
    os << j << ',' << sim.histogram[j] << ','
       << format_number(static_cast<double>(sim.histogram[j]) / n) << ','
       << format_number(analytic[j]) << ',' << format_number(z.z[j]) << '\n';
  }
}

void write_sim_summary_csv(std::ostream& os, const SimResult& sim,
                           double analytic_h_min, const ZReport& z) {
  os << kSimSummaryHeader << '\n';
  const double max_bias =
      sim.bias.empty() ? 0.0 : *std::max_element(sim.bias.begin(), sim.bias.end());
  os << sim.n_samples << ',' << sim.clipped_count << ','
     << format_number(sim.empirical_h_min) << ','
     << format_number(analytic_h_min) << ',' << format_number(z.max_abs_z)
     << ',' << format_number(sim.serial_corr) << ','
     << format_number(max_bias) << '\n';
}

}  // namespace qrng
