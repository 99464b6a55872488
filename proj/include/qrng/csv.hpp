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

#ifndef QRNG_CSV_HPP_
#define QRNG_CSV_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrng/quantizer.hpp"
#include "qrng/sdi.hpp"
#include "qrng/simulator.hpp"
#include "qrng/trusted.hpp"

namespace qrng {

inline constexpr std::string_view kToolName = "qrng-lsb";
inline constexpr std::string_view kToolVersion = QRNG_LSB_VERSION;

inline constexpr std::string_view kTrustedCurveHeader =
    "noise_ratio,discarded,m,h_min,h_min_uncond,rtbr,worst_e";
inline constexpr std::string_view kMinEntropyHeader =
    "noise_ratio,discarded,m,h_min,optimal_bound,crossing";
inline constexpr std::string_view kSdiHeader =
    "resolution,mode,source,c_lsbs,h_max_p,extractable";
inline constexpr std::string_view kIntervalsHeader = "j,tooth_index,lo,hi";
inline constexpr std::string_view kHistogramHeader =
    "symbol,count,frequency,analytic,z";
inline constexpr std::string_view kSimSummaryHeader =
    "n_samples,clipped_count,empirical_h_min,analytic_h_min,max_abs_z,"
    "serial_corr,max_bias";
inline constexpr std::string_view kGuessHeader =
    "seed,p_guess_before,p_guess_after,delta";
inline constexpr std::string_view kEnergyHeader =
    "alpha,transmittance,threshold,gamma,runs,p_pass,eps_tilde";

// Echoed as '#' comment lines at the top of every output file. Holds
// nothing that varies between runs, so equal manifests give equal files.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<std::uint64_t> seed;

  void write(std::ostream& os) const;
};

// 12 significant digits, "-0" printed as "0".
std::string format_number(double x);

void write_trusted_csv(std::ostream& os, std::span<const NoiseCurve> curves);

// Curves with the optimal bound (h = m) and the crossing of each curve
// flagged in the last column.
void write_minentropy_csv(std::ostream& os, std::span<const NoiseCurve> curves,
                          double tol);

void write_sdi_csv(std::ostream& os, std::span<const SdiReport> reports,
                   std::string_view source_label);

// Every tooth of comb j, or of every comb when j is empty.
void write_intervals_csv(std::ostream& os, const AdcConfig& cfg, int m,
                         std::optional<Code> j);

void write_histogram_csv(std::ostream& os, const SimResult& sim,
                         std::span<const double> analytic, const ZReport& z);

void write_sim_summary_csv(std::ostream& os, const SimResult& sim,
                           double analytic_h_min, const ZReport& z);

}  // namespace qrng

#endif  // QRNG_CSV_HPP_
