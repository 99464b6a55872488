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

#ifndef QRNG_GUESSING_HPP_
#define QRNG_GUESSING_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace qrng {

// A classical register X correlated with classical side information E.
// Stored as the joint table P(x, e) = P_X(x) p(e|x) so that merging
// outcomes under a map is a plain sum. Each row carries the symbol it
// stands for.
class CqState {
 public:
  // Validates normalization (1e-12) and non-negativity. Symbols default
  // to 0 .. |X|-1.
  static CqState from_conditional(const std::vector<double>& px,
                                  const std::vector<std::vector<double>>& side,
                                  std::vector<std::uint64_t> symbols = {});

  std::size_t x_size() const { return px_.size(); }
  std::size_t e_size() const { return e_size_; }
  std::uint64_t symbol(std::size_t x) const { return symbols_[x]; }
  double px(std::size_t x) const { return px_[x]; }
  double joint(std::size_t x, std::size_t e) const {
    return joint_[x * e_size_ + e];
  }
  double side(std::size_t x, std::size_t e) const {
    return joint(x, e) / px_[x];
  }

 private:
  friend CqState apply_map(const CqState&,
                           const std::function<std::uint64_t(std::uint64_t)>&);
  CqState() = default;

  std::vector<std::uint64_t> symbols_;
  std::vector<double> px_;
  std::vector<double> joint_;
  std::size_t e_size_ = 0;
};

// sum_e max_x P(x, e): the optimal guess reads e and names the likeliest x.
double p_guess(const CqState& state);

// -log2 p_guess
double min_entropy_cond(const CqState& state);

// Pushes X through a deterministic map. Output rows are ordered by symbol;
// outputs of zero probability are dropped.
CqState apply_map(const CqState& state,
                  const std::function<std::uint64_t(std::uint64_t)>& f);

// Random state with Dirichlet(1, ..., 1) marginal and side-information rows.
CqState random_cq_state(std::mt19937_64& rng, std::size_t x_size,
                        std::size_t e_size);

}  // namespace qrng

#endif  // QRNG_GUESSING_HPP_
