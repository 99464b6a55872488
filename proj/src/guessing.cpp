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

#include "qrng/guessing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "qrng/error.hpp"
#include "qrng/numeric.hpp"

namespace qrng {
namespace {

constexpr double kNormTol = 1e-12;

double checked_sum(const std::vector<double>& v, const char* what) {
  CompensatedSum s;
  for (double x : v) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ParameterError(std::string(what) +
                           " has a negative or non-finite entry");
    }
    s += x;
  }
  if (std::fabs(s.value() - 1.0) > kNormTol) {
    throw ParameterError(std::string(what) + " does not sum to 1");
  }
  return s.value();
}

std::vector<double> dirichlet_ones(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& x : v) total += (x = draw(rng));
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

CqState CqState::from_conditional(const std::vector<double>& px,
                                  const std::vector<std::vector<double>>& side,
                                  std::vector<std::uint64_t> symbols) {
  if (px.empty()) throw ParameterError("empty X alphabet");
  if (side.size() != px.size()) {
    throw ParameterError("side information needs one row per X outcome");
  }
  checked_sum(px, "P_X");
  const std::size_t e_size = side.front().size();
  if (e_size == 0) throw ParameterError("empty side-information alphabet");
  for (const auto& row : side) {
    if (row.size() != e_size) {
      throw ParameterError("side-information rows differ in length");
    }
    checked_sum(row, "side-information row");
  }
  if (symbols.empty()) {
    symbols.resize(px.size());
    std::iota(symbols.begin(), symbols.end(), std::uint64_t{0});
  } else if (symbols.size() != px.size()) {
    throw ParameterError("symbol labels need one entry per X outcome");
  }

  CqState st;
  st.symbols_ = std::move(symbols);
  st.px_ = px;
  st.e_size_ = e_size;
  st.joint_.resize(px.size() * e_size);
  for (std::size_t x = 0; x < px.size(); ++x) {
    for (std::size_t e = 0; e < e_size; ++e) {
      st.joint_[x * e_size + e] = px[x] * side[x][e];
    }
  }
  return st;
}

double p_guess(const CqState& state) {
  double total = 0.0;
  for (std::size_t e = 0; e < state.e_size(); ++e) {
    double best = 0.0;
    for (std::size_t x = 0; x < state.x_size(); ++x) {
      best = std::max(best, state.joint(x, e));
    }
    total += best;
  }
  return total;
}

double min_entropy_cond(const CqState& state) {
  return -std::log2(p_guess(state));
}

CqState apply_map(const CqState& state,
                  const std::function<std::uint64_t(std::uint64_t)>& f) {
  // Rows are accumulated in ascending x, so every merged entry is a
  // floating-point sum of non-negative terms and never drops below any of
  // them.
  std::map<std::uint64_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < state.x_size(); ++x) {
    groups[f(state.symbol(x))].push_back(x);
  }
  const std::size_t ne = state.e_size();
  CqState out;
  out.e_size_ = ne;
  for (const auto& [y, members] : groups) {
    double py = 0.0;
    std::vector<double> row(ne, 0.0);
    for (std::size_t x : members) {
      py += state.px(x);
      for (std::size_t e = 0; e < ne; ++e) row[e] += state.joint(x, e);
    }
    if (py == 0.0) continue;
    out.symbols_.push_back(y);
    out.px_.push_back(py);
    out.joint_.insert(out.joint_.end(), row.begin(), row.end());
  }
  return out;
}

CqState random_cq_state(std::mt19937_64& rng, std::size_t x_size,
                        std::size_t e_size) {
  if (x_size == 0 || e_size == 0) {
    throw ParameterError("random state needs non-empty alphabets");
  }
  std::vector<double> px = dirichlet_ones(rng, x_size);
  std::vector<std::vector<double>> side(x_size);
  for (auto& row : side) row = dirichlet_ones(rng, e_size);
  return CqState::from_conditional(px, side);
}

}  // namespace qrng
