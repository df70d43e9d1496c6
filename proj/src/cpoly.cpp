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

#include "blockmzv/cpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

void require_same_arity(const CPoly& a, const CPoly& b, const char* op) {
  if (a.var_count() != b.var_count()) {
    throw ArityMismatch(std::string(op) + ": variable counts " + std::to_string(a.var_count()) +
                        " and " + std::to_string(b.var_count()) + " differ");
  }
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

}  // namespace

CPoly CPoly::constant(std::size_t vars, const Rational& c) {
  CPoly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

CPoly CPoly::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw ArityMismatch("variable index out of range");
  Exponents e(vars, 0);
  e[index] = 1;
  CPoly p(vars);
  p.add_term(e, 1);
  return p;
}

CPoly CPoly::monomial(Exponents exps, const Rational& c) {
  CPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

void CPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_) throw ArityMismatch("exponent vector length does not match var count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational CPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CPoly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return best;
}

bool CPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    if (d >= 0 && t != d) return false;
    d = t;
  }
  return true;
}

CPoly& CPoly::operator+=(const CPoly& other) {
  require_same_arity(*this, other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& other) {
  require_same_arity(*this, other, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& other) {
  *this = *this * other;
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  require_same_arity(a, b, "mul");
  CPoly out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CPoly CPoly::scale(const Rational& c) const {
  CPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

Rational CPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_) throw ArityMismatch("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i]) t *= pow(point[i], e[i]);
    }
    total += t;
  }
  return total;
}

CPoly CPoly::substitute(std::span<const Slot> slots, std::size_t result_vars) const {
  if (slots.size() != vars_) throw ArityMismatch("substitute: slot count does not match var count");
  std::size_t need = 0;
  for (const Slot& s : slots) {
    if (s.sign != 0) need = std::max(need, s.source + 1);
  }
  if (result_vars == 0) result_vars = need;
  if (result_vars < need) throw ArityMismatch("substitute: source index exceeds result var count");
  CPoly out(result_vars);
  Exponents e(result_vars);
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0u);
    bool negative = false;
    bool vanishes = false;
    for (std::size_t j = 0; j < vars_; ++j) {
      if (src[j] == 0) continue;
      if (slots[j].sign == 0) {
        vanishes = true;
        break;
      }
      e[slots[j].source] += src[j];
      if (slots[j].sign < 0 && (src[j] & 1u)) negative = !negative;
    }
    if (!vanishes) out.add_term(e, negative ? Rational(-c) : c);
  }
  return out;
}

CPoly CPoly::compose(const std::vector<CPoly>& images) const {
  if (images.size() != vars_) throw ArityMismatch("compose: image count does not match var count");
  std::size_t target = images.empty() ? 0 : images.front().var_count();
  for (const CPoly& im : images) require_same_arity(im, images.front(), "compose");
  // powers[j][d] = images[j]^d, built lazily
  std::vector<std::vector<CPoly>> powers(vars_);
  auto power = [&](std::size_t j, unsigned d) -> const CPoly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(CPoly::constant(target, 1));
    while (cache.size() <= d) cache.push_back(cache.back() * images[j]);
    return cache[d];
  };
  CPoly out(target);
  for (const auto& [e, c] : terms_) {
    CPoly t = CPoly::constant(target, c);
    for (std::size_t j = 0; j < vars_; ++j) {
      if (e[j]) t = t * power(j, e[j]);
    }
    out += t;
  }
  return out;
}

CPoly CPoly::derivative(std::size_t index) const {
  if (index >= vars_) throw ArityMismatch("derivative: variable index out of range");
  CPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

CPoly CPoly::divide_by_variable(std::size_t index) const {
  if (index >= vars_) throw ArityMismatch("divide_by_variable: index out of range");
  CPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) {
      throw InexactDivision("term is not divisible by x" + std::to_string(index + 1));
    }
    Exponents d = e;
    --d[index];
    out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
  }
  return out;
}

CPoly CPoly::extended(std::size_t vars) const {
  if (vars < vars_) throw ArityMismatch("extended: cannot drop variables");
  CPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d.resize(vars, 0);
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

CPoly divide_exact(const CPoly& num, const CPoly& den) {
  require_same_arity(num, den, "divide_exact");
  if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  const std::size_t n = num.var_count();
  CPoly quotient(n);
  CPoly rem = num;
  Exponents e(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (!divides(lead_e, re)) {
      throw InexactDivision("leading term " + to_string(CPoly::monomial(re, rc)) +
                            " is not divisible by " + to_string(CPoly::monomial(lead_e, lead_c)));
    }
    for (std::size_t i = 0; i < n; ++i) e[i] = re[i] - lead_e[i];
    Rational c = rc / lead_c;
    quotient.add_term(e, c);
    for (const auto& [de, dc] : den.terms()) {
      Exponents t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = de[i] + e[i];
      rem.add_term(t, -c * dc);
    }
  }
  return quotient;
}

std::string to_string(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

CPoly parse_monomial(std::string_view text, std::size_t vars) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> InvalidInput {
    return InvalidInput("invalid monomial '" + std::string(text) + "' at position " +
                            std::to_string(i + 1) + ": " + what,
                        i + 1);
  };
  auto read_uint = [&]() -> unsigned long {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw fail("expected a digit");
    }
    unsigned long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > 1000000) throw fail("number too large");
      ++i;
    }
    return v;
  };
  if (text.empty()) throw InvalidInput("empty monomial", 1);
  Rational coeff = 1;
  std::vector<std::pair<std::size_t, unsigned>> factors;
  if (text[i] == '-') {
    coeff = -1;
    ++i;
  }
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    coeff *= parse_rational(text.substr(start, i - start));
    if (i == text.size()) {
      return CPoly::constant(vars, coeff);
    }
    if (text[i] != '*') throw fail("expected '*'");
    ++i;
  }
  while (true) {
    if (i >= text.size() || text[i] != 'x') throw fail("expected 'x'");
    ++i;
    auto index = read_uint();
    if (index == 0) {
      --i;
      throw fail("variable indices start at 1");
    }
    unsigned exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = static_cast<unsigned>(read_uint());
    }
    factors.emplace_back(index - 1, exp);
    if (i == text.size()) break;
    if (text[i] != '*') throw fail("expected '*' or end of input");
    ++i;
  }
  std::size_t need = 0;
  for (const auto& f : factors) need = std::max(need, f.first + 1);
  Exponents e(std::max(need, vars), 0);
  for (const auto& [idx, ex] : factors) e[idx] += ex;
  return CPoly::monomial(e, coeff);
}

std::optional<Rational> proportionality(const CPoly& a, const CPoly& b) {
  if (b.is_zero()) throw InexactDivision("proportionality against the zero polynomial");
  if (a.var_count() != b.var_count()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  if (a.term_count() != b.term_count()) return std::nullopt;
  const auto& [e0, c0] = *b.terms().begin();
  Rational lambda = a.coefficient(e0) / c0;
  if (lambda == 0) return std::nullopt;
  if (a == b.scale(lambda)) return lambda;
  return std::nullopt;
}

}  // namespace blockmzv
