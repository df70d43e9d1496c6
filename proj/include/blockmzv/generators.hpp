// Copyright 2026 The blockmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "blockmzv/cpoly.hpp"

namespace blockmzv {

// A homogeneous block polynomial f(x1..xn): weight = degree - 2,
// block degree = n - 1.
struct BGElement {
  CPoly poly;
  std::size_t weight = 0;
  std::size_t block_degree = 0;
};

// Throws NotHomogeneous on inhomogeneous or zero input without a weight.
BGElement make_bg_element(const CPoly& poly);

// c_0, ..., c_k of q_{2k+1}. For i >= 1,
//   c_i = C(2k,2i) - (1 - 2^{-2k}) C(2k, 2k+1-2i),
// and c_0 = -2 (c_1 + ... + c_k).
std::vector<Rational> q_coefficients(std::size_t k);

// sum_i c_i x1^{2i+1} x2^{2k+2-2i}.
CPoly q_from_coefficients(const std::vector<Rational>& c);

CPoly q_gen(std::size_t k);

// x1 x2 (x1 - x2) ((1 - 2^{2k+1})(x1 + x2)^{2k} - (x1 - x2)^{2k}) / 2^{2k}.
BGElement p_gen(std::size_t k);

// f(x2, x1).
CPoly swap_variables(const CPoly& f);

// lambda with p_gen(k) = lambda (q(x1,x2) - q(x2,x1)); nullopt if none.
std::optional<Rational> generator_normalization(std::size_t k);

// The generator family used by the verification suites. By default p(k) is
// the closed form; a mutation replaces one q coefficient and rebuilds p(k)
// as 2 (q(x1,x2) - q(x2,x1)).
class GeneratorSet {
 public:
  static GeneratorSet closed_form() { return GeneratorSet(); }
  GeneratorSet with_flipped_q_coefficient(std::size_t k, std::size_t i) const;

  CPoly p(std::size_t k) const;
  bool is_mutated() const noexcept { return !overrides_.empty(); }
  const std::map<std::size_t, std::vector<Rational>>& overrides() const noexcept { return overrides_; }

 private:
  std::map<std::size_t, std::vector<Rational>> overrides_;
};

struct CharacterizationResult {
  std::size_t dimension = 0;
  std::vector<CPoly> basis;
};

// Homogeneous degree-(2k+3) polynomials p in two variables with
//   p(x1,0) = p(0,x2) = 0, p(x1,x2) + p(x2,x1) = 0,
// and, for r = p / (x1 x2 (x1 - x2)),
//   r(0,x) = 2 r(x,-x),  d1^2 r = d2^2 r.
CharacterizationResult characterize_generator(std::size_t k);

}  // namespace blockmzv
