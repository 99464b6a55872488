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

#include "qrng_lsb/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qrng/csv.hpp"
#include "qrng/error.hpp"
#include "qrng/gauss_model.hpp"
#include "qrng/guessing.hpp"
#include "qrng/quantizer.hpp"
#include "qrng/sdi.hpp"
#include "qrng/simulator.hpp"
#include "qrng/trusted.hpp"

namespace qrng::cli {
namespace {

namespace fs = std::filesystem;

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    if constexpr (std::is_floating_point_v<T>) {
      s += format_number(values[i]);
    } else {
      s += std::to_string(values[i]);
    }
  }
  return s;
}

fs::path resolve(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      return fs::path(dir) / p;
    }
  }
  return p;
}

// Writes manifest + body to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const RunManifest& manifest,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    manifest.write(fallback);
    body(fallback);
    return;
  }
  const fs::path target = resolve(path);
  std::ofstream file(target, std::ios::binary);
  if (!file) throw ConfigurationError("cannot open " + target.string());
  manifest.write(file);
  body(file);
  if (!file) throw ConfigurationError("failed writing " + target.string());
}

struct PlotSpec {
  std::string csv;     // data file the script reads
  std::string title;
  std::string xlabel;
  std::string ylabel;
  int group_col;       // column holding the curve label
  int x_col;
  int y_col;
  std::vector<std::string> groups;
  std::string group_label;
  std::optional<std::string> extra;  // appended plot element
};

void emit_plot(const std::string& path, const RunManifest& manifest,
               const PlotSpec& spec) {
  if (path.empty()) return;
  if (spec.csv.empty()) {
    throw ConfigurationError("--plot needs --out so the script has data");
  }
  emit(path, std::cout, manifest, [&](std::ostream& os) {
    os << "set datafile separator ','\n"
       << "set datafile commentschars '#'\n"
       << "set key outside right\n"
       << "set title '" << spec.title << "'\n"
       << "set xlabel '" << spec.xlabel << "'\n"
       << "set ylabel '" << spec.ylabel << "'\n"
       << "plot";
    for (std::size_t i = 0; i < spec.groups.size(); ++i) {
      os << (i == 0 ? " " : ", \\\n     ") << "'" << spec.csv
         << "' every ::1 using " << spec.x_col << ":(strcol(" << spec.group_col
         << ") eq '" << spec.groups[i] << "' ? $" << spec.y_col
         << " : 1/0) with linespoints title '" << spec.group_label
         << spec.groups[i] << "'";
    }
    if (spec.extra) os << ", \\\n     " << *spec.extra;
    os << '\n';
  });
}

// ---------------------------------------------------------------- trusted

struct TrustedArgs {
  int bits = 16;
  std::optional<double> alpha;
  double margin = 5.0;
  double sigma_q = 1.0;
  std::vector<double> ratios{0, 1, 2, 3, 4, 10, 100};
  double excursion = 12.0;
  double tol = 1e-3;
  std::string out;
  std::string plot;
};

void add_trusted_options(CLI::App* sub, TrustedArgs& a, bool with_tol) {
  sub->add_option("--bits", a.bits, "ADC resolution L")
      ->check(CLI::Range(1, AdcConfig::kMaxBits))
      ->capture_default_str();
  sub->add_option("--alpha", a.alpha,
                  "Fixed ADC half-range; default sizes each curve's range "
                  "as excursion*sigma_e + margin*sigma_q")
      ->check(CLI::PositiveNumber);
  sub->add_option("--range-margin", a.margin,
                  "Range margin in units of sigma_q")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--sigma-q", a.sigma_q, "Quantum signal std-dev")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--noise-ratios", a.ratios, "sigma_e / sigma_q per curve")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--excursion", a.excursion,
                  "Classical offset bound in units of sigma_e")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  if (with_tol) {
    sub->add_option("--tol", a.tol, "Optimal-bound crossing tolerance (bits)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  sub->add_option("--out", a.out, "CSV output path (default stdout)");
  sub->add_option("--plot", a.plot, "Also write a gnuplot script here");
}

RunManifest trusted_manifest(const std::string& name, const TrustedArgs& a,
                             bool with_tol) {
  RunManifest m{name, {}, std::nullopt};
  m.params.emplace_back("bits", std::to_string(a.bits));
  m.params.emplace_back("alpha", a.alpha ? format_number(*a.alpha) : "auto");
  m.params.emplace_back("range-margin", format_number(a.margin));
  m.params.emplace_back("sigma-q", format_number(a.sigma_q));
  m.params.emplace_back("noise-ratios", join(a.ratios));
  m.params.emplace_back("excursion", format_number(a.excursion));
  if (with_tol) m.params.emplace_back("tol", format_number(a.tol));
  return m;
}

std::vector<NoiseCurve> compute_family(const TrustedArgs& a,
                                       std::ostream& err) {
  FamilyConfig fc;
  fc.bits = a.bits;
  fc.sigma_q = a.sigma_q;
  fc.noise_ratios = a.ratios;
  fc.alpha = a.alpha;
  fc.margin_sigmas = a.margin;
  fc.options.excursion_sigmas = a.excursion;
  fc.options.crossing_tol = a.tol;
  auto curves = trusted_family(fc);
  for (const NoiseCurve& c : curves) {
    for (const TrustedReport& r : c.reports) {
      if (r.range_warning) {
        err << "warning: noise ratio " << format_number(c.noise_ratio)
            << ": out-of-range mass " << format_number(r.tail_mass)
            << " exceeds the clipping guard; widen the ADC range\n";
        break;
      }
    }
  }
  return curves;
}

std::vector<std::string> ratio_labels(const std::vector<double>& ratios) {
  std::vector<std::string> out;
  for (double r : ratios) out.push_back(format_number(r));
  return out;
}

int cmd_trusted_curve(const TrustedArgs& a, std::ostream& out,
                      std::ostream& err) {
  const RunManifest manifest = trusted_manifest("trusted-curve", a, false);
  const auto curves = compute_family(a, err);
  emit(a.out, out, manifest,
       [&](std::ostream& os) { write_trusted_csv(os, curves); });
  emit_plot(a.plot, manifest,
            {a.out, "Random-to-total bits ratio", "discarded MSBs", "RTBR", 1,
             2, 6, ratio_labels(a.ratios), "sigma_e/sigma_q = ",
             std::nullopt});
  return kExitOk;
}

int cmd_trusted_minentropy(const TrustedArgs& a, std::ostream& out,
                           std::ostream& err) {
  const RunManifest manifest = trusted_manifest("trusted-minentropy", a, true);
  const auto curves = compute_family(a, err);
  emit(a.out, out, manifest, [&](std::ostream& os) {
    write_minentropy_csv(os, curves, a.tol);
  });
  emit_plot(a.plot, manifest,
            {a.out, "Min-entropy vs discarded MSBs", "discarded MSBs",
             "min-entropy (bits)", 1, 2, 4, ratio_labels(a.ratios),
             "sigma_e/sigma_q = ",
             "'" + a.out +
                 "' every ::1 using 2:5 with lines dt 2 lc rgb 'black' "
                 "title 'optimal bound', '" +
                 a.out +
                 "' every ::1 using 2:($6 == 1 ? $4 : 1/0) with points pt 7 "
                 "ps 1.5 title 'crossing'"});
  return kExitOk;
}

// -------------------------------------------------------------------- sdi

struct SdiArgs {
  std::vector<std::string> resolutions{"8", "9",  "10", "11", "12",
                                       "13", "14", "15", "16"};
  std::string source = "vacuum";
  std::string mode = "all";
  std::optional<double> alpha;
  std::optional<double> alpha_p;
  double range_sigmas = 5.0;
  double hbar = 1.0;
  double vacuum_variance = 0.5;
  EnergyTest energy;
  double eps1 = 1e-10;
  double eps_s = 1e-12;
  std::string out;
  std::string plot;
};

SourceSpec parse_source(const std::string& text, double v0) {
  if (text == "vacuum") return SourceSpec::vacuum(v0);
  const std::string prefix = "thermal:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string num = text.substr(prefix.size());
    std::size_t used = 0;
    double nbar = 0.0;
    try {
      nbar = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == num.size() && used > 0 && std::isfinite(nbar) && nbar >= 0.0) {
      return SourceSpec::thermal(nbar, v0);
    }
  }
  throw CLI::ValidationError("--source",
                             "expected 'vacuum' or 'thermal:<nbar>', got '" +
                                 text + "'");
}

std::vector<PostprocessMode> parse_modes(const std::string& text) {
  if (text == "all") {
    return {PostprocessMode::kRaw, PostprocessMode::kLsbX,
            PostprocessMode::kLsbXP};
  }
  if (text == "1") return {PostprocessMode::kRaw};
  if (text == "2") return {PostprocessMode::kLsbX};
  if (text == "3") return {PostprocessMode::kLsbXP};
  throw CLI::ValidationError("--mode", "expected 1, 2, 3 or all");
}

std::vector<int> parse_resolutions(const std::vector<std::string>& items) {
  std::vector<int> out;
  for (const std::string& item : items) {
    if (item.empty()) continue;
    int r = 0;
    if (!CLI::detail::lexical_cast(item, r) || r < 1 ||
        r > AdcConfig::kMaxBits) {
      throw CLI::ValidationError(
          "--resolutions", "expected integers in [1, " +
                               std::to_string(AdcConfig::kMaxBits) +
                               "], got '" + item + "'");
    }
    out.push_back(r);
  }
  return out;
}

int cmd_sdi_curve(const SdiArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<int> resolutions = parse_resolutions(a.resolutions);
  const SourceSpec source = parse_source(a.source, a.vacuum_variance);
  const auto modes = parse_modes(a.mode);

  SdiCurveConfig cc;
  cc.alpha = a.alpha.value_or(a.range_sigmas * marginal_sigma(source));
  cc.alpha_p = a.alpha_p.value_or(cc.alpha);
  cc.hbar = a.hbar;
  cc.energy = a.energy;
  cc.eps1 = a.eps1;
  cc.eps_s = a.eps_s;

  RunManifest manifest{"sdi-curve", {}, std::nullopt};
  manifest.params = {
      {"resolutions", join(resolutions)},
      {"source", a.source},
      {"mode", a.mode},
      {"alpha", format_number(cc.alpha)},
      {"alpha-p", format_number(cc.alpha_p)},
      {"hbar", format_number(a.hbar)},
      {"vacuum-variance", format_number(a.vacuum_variance)},
      {"energy-t", format_number(a.energy.transmittance)},
      {"energy-m", format_number(a.energy.threshold)},
      {"runs", std::to_string(a.energy.runs)},
      {"p-pass", format_number(a.energy.p_pass)},
      {"eps1", format_number(a.eps1)},
      {"eps-s", format_number(a.eps_s)},
  };

  std::vector<SdiReport> rows;
  for (PostprocessMode mode : modes) {
    auto part = sdi_curve(resolutions, source, mode, cc);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  for (const SdiReport& r : rows) {
    if (r.clipped_guard) {
      err << "warning: resolution " << r.resolution
          << ": P-quadrature mass outside the ADC range exceeds "
          << format_number(kClippedMassGuard) << "\n";
      break;
    }
  }
  emit(a.out, out, manifest,
       [&](std::ostream& os) { write_sdi_csv(os, rows, a.source); });
  std::vector<std::string> groups;
  for (PostprocessMode mode : modes) groups.emplace_back(mode_name(mode));
  emit_plot(a.plot, manifest,
            {a.out, "Extractable bits (" + a.source + ")", "ADC resolution",
             "extractable bits", 2, 1, 6, groups, "mode ", std::nullopt});
  return kExitOk;
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int bits = 8;
  int m = 8;
  std::optional<double> alpha;
  double range_sigmas = 5.0;
  double sigma_q = 1.0;
  double noise_ratio = 0.0;
  std::optional<double> sigma_m;
  double sigma_e = 0.0;
  std::string out;
  std::string summary;
  std::string dump;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream&) {
  if (a.m > a.bits) {
    throw CLI::ValidationError("--m", "must not exceed --bits");
  }
  SimConfig cfg;
  cfg.n_samples = a.samples;
  cfg.seed = a.seed;
  cfg.noise = a.sigma_m
                  ? NoiseModel::from_measured(*a.sigma_m, a.sigma_e)
                  : NoiseModel::from_quantum(a.sigma_q,
                                             a.noise_ratio * a.sigma_q);
  cfg.adc = AdcConfig(a.alpha.value_or(a.range_sigmas * cfg.noise.sigma_m()),
                      a.bits);
  cfg.m = a.m;
  cfg.keep_symbols = !a.dump.empty();

  RunManifest manifest{"simulate", {}, a.seed};
  manifest.params = {
      {"samples", std::to_string(a.samples)},
      {"bits", std::to_string(a.bits)},
      {"m", std::to_string(a.m)},
      {"alpha", format_number(cfg.adc.alpha())},
      {"sigma-q", format_number(cfg.noise.sigma_q())},
      {"sigma-e", format_number(cfg.noise.sigma_e())},
      {"batch-size", std::to_string(cfg.batch_size)},
  };

  const SimResult sim = run(cfg);
  const auto analytic = analytic_symbol_probs(cfg);
  const ZReport z = compare(sim, analytic);
  emit(a.out, out, manifest, [&](std::ostream& os) {
    write_histogram_csv(os, sim, analytic, z);
  });
  if (!a.summary.empty()) {
    const double h = min_entropy_unconditional(cfg.adc, cfg.m,
                                               cfg.noise.sigma_m());
    emit(a.summary, out, manifest,
         [&](std::ostream& os) { write_sim_summary_csv(os, sim, h, z); });
  }
  if (!a.dump.empty()) {
    const fs::path target = resolve(a.dump);
    std::ofstream file(target, std::ios::binary);
    if (!file) throw ConfigurationError("cannot open " + target.string());
    write_bit_dump(file, sim, cfg.m);
  }
  return kExitOk;
}

// ------------------------------------------------------------- guess-demo

struct GuessArgs {
  std::size_t instances = 200;
  std::uint64_t seed = 7;
  int x_bits = 4;
  std::size_t e_size = 4;
  int m = 1;
  std::string out;
};

int cmd_guess_demo(const GuessArgs& a, std::ostream& out, std::ostream&) {
  if (a.m > a.x_bits) {
    throw CLI::ValidationError("--m", "must not exceed --x-bits");
  }
  RunManifest manifest{"guess-demo", {}, a.seed};
  manifest.params = {
      {"instances", std::to_string(a.instances)},
      {"x-bits", std::to_string(a.x_bits)},
      {"e-size", std::to_string(a.e_size)},
      {"m", std::to_string(a.m)},
  };
  emit(a.out, out, manifest, [&](std::ostream& os) {
    os << kGuessHeader << '\n';
    for (std::size_t i = 0; i < a.instances; ++i) {
      const std::uint64_t seed = a.seed + i;
      std::mt19937_64 rng(seed);
      const CqState before =
          random_cq_state(rng, std::size_t{1} << a.x_bits, a.e_size);
      const CqState after = apply_map(
          before, [m = a.m](std::uint64_t x) { return lsb_extract(x, m); });
      const double pb = p_guess(before);
      const double pa = p_guess(after);
      os << seed << ',' << format_number(pb) << ',' << format_number(pa)
         << ',' << format_number(pa - pb) << '\n';
    }
  });
  return kExitOk;
}

// -------------------------------------------------------------- intervals

struct IntervalArgs {
  double alpha = 4.0;
  int bits = 3;
  int m = 2;
  std::optional<Code> j;
  std::string out;
};

int cmd_intervals(const IntervalArgs& a, std::ostream& out, std::ostream&) {
  const AdcConfig cfg(a.alpha, a.bits);
  check_kept_bits(cfg, a.m);
  RunManifest manifest{"intervals", {}, std::nullopt};
  manifest.params = {
      {"alpha", format_number(a.alpha)},
      {"bits", std::to_string(a.bits)},
      {"m", std::to_string(a.m)},
      {"j", a.j ? std::to_string(*a.j) : "all"},
  };
  emit(a.out, out, manifest,
       [&](std::ostream& os) { write_intervals_csv(os, cfg, a.m, a.j); });
  return kExitOk;
}

// ------------------------------------------------------------ energy-test

struct EnergyArgs {
  double alpha = 10.0;
  double t = 0.99;
  double threshold = 3.0;
  std::uint64_t runs = 1000000;
  double p_pass = 0.99;
  std::string out;
};

int cmd_energy_test(const EnergyArgs& a, std::ostream& out, std::ostream&) {
  RunManifest manifest{"energy-test", {}, std::nullopt};
  manifest.params = {
      {"alpha", format_number(a.alpha)},
      {"t", format_number(a.t)},
      {"m", format_number(a.threshold)},
      {"runs", std::to_string(a.runs)},
      {"p-pass", format_number(a.p_pass)},
  };
  const double gamma = energy_test_gamma(a.alpha, a.t, a.threshold);
  const double eps = energy_test_smoothness(a.runs, gamma, a.p_pass);
  emit(a.out, out, manifest, [&](std::ostream& os) {
    os << kEnergyHeader << '\n'
       << format_number(a.alpha) << ',' << format_number(a.t) << ','
       << format_number(a.threshold) << ',' << format_number(gamma) << ','
       << a.runs << ',' << format_number(a.p_pass) << ','
       << format_number(eps) << '\n';
  });
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"m-LSB postprocessing entropy toolkit for coherent-detection "
               "QRNGs",
               "qrng-lsb"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  TrustedArgs curve_args;
  auto* curve = app.add_subcommand(
      "trusted-curve", "RTBR vs discarded MSBs for several noise levels");
  add_trusted_options(curve, curve_args, false);

  TrustedArgs minent_args;
  auto* minent = app.add_subcommand(
      "trusted-minentropy",
      "Min-entropy vs discarded MSBs with the optimal-bound crossings");
  add_trusted_options(minent, minent_args, true);

  SdiArgs sdi_args;
  auto* sdi = app.add_subcommand(
      "sdi-curve", "Source-device-independent extractable bits vs resolution");
  sdi->add_option("--resolutions", sdi_args.resolutions,
                  "ADC resolutions (X and P); may be empty")
      ->delimiter(',')
      ->expected(0, CLI::detail::expected_max_vector_size);
  sdi->add_option("--source", sdi_args.source, "vacuum | thermal:<nbar>")
      ->capture_default_str();
  sdi->add_option("--mode", sdi_args.mode, "1 | 2 | 3 | all")
      ->capture_default_str();
  sdi->add_option("--alpha", sdi_args.alpha,
                  "X half-range; default range-sigmas * source std-dev")
      ->check(CLI::PositiveNumber);
  sdi->add_option("--alpha-p", sdi_args.alpha_p, "P half-range; default alpha")
      ->check(CLI::PositiveNumber);
  sdi->add_option("--range-sigmas", sdi_args.range_sigmas)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sdi->add_option("--hbar", sdi_args.hbar)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sdi->add_option("--vacuum-variance", sdi_args.vacuum_variance)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sdi->add_option("--energy-t", sdi_args.energy.transmittance,
                  "Energy-test transmittance in (1/2, 1]")
      ->check(CLI::Range(0.5, 1.0))
      ->capture_default_str();
  sdi->add_option("--energy-m", sdi_args.energy.threshold,
                  "Energy-test threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sdi->add_option("--runs", sdi_args.energy.runs)->capture_default_str();
  sdi->add_option("--p-pass", sdi_args.energy.p_pass)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sdi->add_option("--eps1", sdi_args.eps1)->capture_default_str();
  sdi->add_option("--eps-s", sdi_args.eps_s)->capture_default_str();
  sdi->add_option("--out", sdi_args.out, "CSV output path (default stdout)");
  sdi->add_option("--plot", sdi_args.plot, "Also write a gnuplot script here");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate",
                                 "Monte Carlo run of sample, quantize, keep "
                                 "m LSBs");
  sim->add_option("--samples", sim_args.samples)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--seed", sim_args.seed)->capture_default_str();
  sim->add_option("--bits", sim_args.bits)
      ->check(CLI::Range(1, AdcConfig::kMaxBits))
      ->capture_default_str();
  sim->add_option("--m", sim_args.m, "Kept LSBs")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  sim->add_option("--alpha", sim_args.alpha,
                  "ADC half-range; default range-sigmas * sigma_m")
      ->check(CLI::PositiveNumber);
  sim->add_option("--range-sigmas", sim_args.range_sigmas)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--sigma-q", sim_args.sigma_q)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--noise-ratio", sim_args.noise_ratio, "sigma_e / sigma_q")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sim->add_option("--sigma-m", sim_args.sigma_m,
                  "Measured total std-dev; with --sigma-e replaces "
                  "--sigma-q/--noise-ratio")
      ->check(CLI::PositiveNumber);
  sim->add_option("--sigma-e", sim_args.sigma_e,
                  "Classical noise std-dev (with --sigma-m)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sim->add_option("--out", sim_args.out, "Histogram CSV (default stdout)");
  sim->add_option("--summary", sim_args.summary, "Summary CSV path");
  sim->add_option("--dump", sim_args.dump,
                  "Raw output bits, packed LSB first");

  GuessArgs guess_args;
  auto* guess = app.add_subcommand(
      "guess-demo", "Guessing probability before and after the LSB map");
  guess->add_option("--instances", guess_args.instances)->capture_default_str();
  guess->add_option("--seed", guess_args.seed)->capture_default_str();
  guess->add_option("--x-bits", guess_args.x_bits, "log2 |X|")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  guess->add_option("--e-size", guess_args.e_size, "|E|")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  guess->add_option("--m", guess_args.m, "Kept LSBs")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  guess->add_option("--out", guess_args.out, "CSV output path");

  IntervalArgs interval_args;
  auto* intervals =
      app.add_subcommand("intervals", "Teeth of the m-LSB comb sets");
  intervals->add_option("--alpha", interval_args.alpha)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  intervals->add_option("--bits", interval_args.bits)
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  intervals->add_option("--m", interval_args.m)
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  intervals->add_option("--j", interval_args.j, "Single output symbol");
  intervals->add_option("--out", interval_args.out, "CSV output path");

  EnergyArgs energy_args;
  auto* energy = app.add_subcommand(
      "energy-test", "Energy-test bound and its smoothing parameter");
  energy->add_option("--alpha", energy_args.alpha)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  energy->add_option("--t", energy_args.t, "Transmittance in (1/2, 1]")
      ->capture_default_str();
  energy->add_option("--m", energy_args.threshold, "Threshold M")
      ->capture_default_str();
  energy->add_option("--runs", energy_args.runs)->capture_default_str();
  energy->add_option("--p-pass", energy_args.p_pass)->capture_default_str();
  energy->add_option("--out", energy_args.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version arrive here with exit code 0.
    std::ostringstream msg_out;
    std::ostringstream msg_err;
    const int code = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*curve) return cmd_trusted_curve(curve_args, out, err);
    if (*minent) return cmd_trusted_minentropy(minent_args, out, err);
    if (*sdi) return cmd_sdi_curve(sdi_args, out, err);
    if (*sim) return cmd_simulate(sim_args, out, err);
    if (*guess) return cmd_guess_demo(guess_args, out, err);
    if (*intervals) return cmd_intervals(interval_args, out, err);
    if (*energy) return cmd_energy_test(energy_args, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelError;
  }
  return kExitUsage;
}

}  // namespace qrng::cli
