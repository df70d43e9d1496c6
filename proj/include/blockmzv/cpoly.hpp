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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockmzv/rational.hpp"

namespace blockmzv {

using Exponents = std::vector<unsigned>;

// Target of one variable under CPoly::substitute. A sign of 0 sends the
// variable to zero; otherwise x_j becomes sign * x_{source} (0-based source).
struct Slot {
  int sign = 1;
  std::size_t source = 0;
};

inline Slot keep(std::size_t source) { return {1, source}; }
inline Slot negate(std::size_t source) { return {-1, source}; }
inline Slot zero_slot() { return {0, 0}; }

// Sparse polynomial in x1..xn over Q. Terms are kept in lexicographic
// exponent order; zero coefficients are never stored.
class CPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  CPoly() = default;
  explicit CPoly(std::size_t vars) : vars_(vars) {}

  static CPoly constant(std::size_t vars, const Rational& c);
  // x_{index+1} in a ring of `vars` variables.
  static CPoly variable(std::size_t vars, std::size_t index);
  static CPoly monomial(Exponents exps, const Rational& c = 1);

  std::size_t var_count() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Exponents& exps, const Rational& c);
  Rational coefficient(const Exponents& exps) const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  CPoly& operator+=(const CPoly& other);
  CPoly& operator-=(const CPoly& other);
  CPoly& operator*=(const CPoly& other);
  CPoly scale(const Rational& c) const;
  CPoly operator-() const { return scale(-1); }

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend bool operator==(const CPoly& a, const CPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const;

  // Replaces x_j by slots[j]. The result lives in `result_vars` variables,
  // or in (largest source + 1) variables when result_vars is 0.
  CPoly substitute(std::span<const Slot> slots, std::size_t result_vars = 0) const;

  // General substitution x_j -> images[j]; all images share a var count.
  CPoly compose(const std::vector<CPoly>& images) const;

  // d/dx_{index+1}.
  CPoly derivative(std::size_t index) const;

  // Divides by x_{index+1}; throws InexactDivision if some term lacks it.
  CPoly divide_by_variable(std::size_t index) const;

  // Same polynomial viewed in a ring with more variables.
  CPoly extended(std::size_t vars) const;

 private:
  std::size_t vars_ = 0;
  TermMap terms_;
};

// q with q * den == num. Leading-term elimination in lex order.
CPoly divide_exact(const CPoly& num, const CPoly& den);

// Human-readable form with terms in descending lex order, e.g.
// "-2*x1^2 - 3*x1*x2 - 2*x2^2".
std::string to_string(const CPoly& p);

// Parses a monomial such as "x1^3*x2^2" or "2*x1^4". The variable count is
// the largest index that appears unless `vars` is larger.
CPoly parse_monomial(std::string_view text, std::size_t vars = 0);

// lambda with a == lambda * b, if one exists. b must be nonzero.
std::optional<Rational> proportionality(const CPoly& a, const CPoly& b);

}  // namespace blockmzv
