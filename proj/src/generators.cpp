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

#include "blockmzv/generators.hpp"

#include <set>

#include "blockmzv/errors.hpp"
#include "blockmzv/linalg.hpp"
#include "blockmzv/relations.hpp"

namespace blockmzv {

namespace {

void require_positive(std::size_t k, const char* who) {
  if (k == 0) throw InvalidInput(std::string(who) + ": k must be at least 1");
}

// Coefficient vectors of several constraint polynomials, stacked.
Matrix constraint_matrix(const std::vector<std::vector<CPoly>>& per_unknown) {
  const std::size_t unknowns = per_unknown.size();
  const std::size_t kinds = unknowns ? per_unknown.front().size() : 0;
  Matrix rows;
  for (std::size_t c = 0; c < kinds; ++c) {
    std::set<Exponents> monos;
    for (const auto& u : per_unknown) {
      for (const auto& [e, v] : u[c].terms()) monos.insert(e);
    }
    for (const Exponents& e : monos) {
      Vector row(unknowns);
      for (std::size_t j = 0; j < unknowns; ++j) row[j] = per_unknown[j][c].coefficient(e);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

BGElement make_bg_element(const CPoly& poly) {
  if (poly.is_zero() || !poly.is_homogeneous() || poly.degree() < 2 || poly.var_count() == 0) {
    throw NotHomogeneous("block polynomial must be nonzero, homogeneous and of degree >= 2");
  }
  return {poly, static_cast<std::size_t>(poly.degree()) - 2, poly.var_count() - 1};
}

std::vector<Rational> q_coefficients(std::size_t k) {
  require_positive(k, "q_coefficients");
  const Rational factor = 1 - Rational(1, 1) / pow(Rational(2), static_cast<unsigned>(2 * k));
  std::vector<Rational> c(k + 1);
  Rational sum = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    c[i] = Rational(binomial(2 * k, 2 * i)) - factor * Rational(binomial(2 * k, 2 * k + 1 - 2 * i));
    sum += c[i];
  }
  c[0] = -2 * sum;
  return c;
}

CPoly q_from_coefficients(const std::vector<Rational>& c) {
  if (c.size() < 2) throw InvalidInput("q_from_coefficients: need c_0 .. c_k with k >= 1");
  const unsigned k = static_cast<unsigned>(c.size() - 1);
  CPoly q(2);
  for (unsigned i = 0; i <= k; ++i) q.add_term({2 * i + 1, 2 * k + 2 - 2 * i}, c[i]);
  return q;
}

CPoly q_gen(std::size_t k) { return q_from_coefficients(q_coefficients(k)); }

BGElement p_gen(std::size_t k) {
  require_positive(k, "p_gen");
  const CPoly x1 = CPoly::variable(2, 0);
  const CPoly x2 = CPoly::variable(2, 1);
  const CPoly plus = x1 + x2;
  const CPoly minus = x1 - x2;
  CPoly a = CPoly::constant(2, 1);
  CPoly b = CPoly::constant(2, 1);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    a *= plus;
    b *= minus;
  }
  const Rational two_k = pow(Rational(2), static_cast<unsigned>(2 * k));
  CPoly inner = a.scale(1 - 2 * two_k) - b;
  CPoly p = (x1 * x2 * minus * inner).scale(1 / two_k);
  return {p, 2 * k + 1, 1};
}

CPoly swap_variables(const CPoly& f) {
  const Slot s[] = {keep(1), keep(0)};
  return f.substitute(s, 2);
}

std::optional<Rational> generator_normalization(std::size_t k) {
  CPoly q = q_gen(k);
  return proportionality(p_gen(k).poly, q - swap_variables(q));
}

GeneratorSet GeneratorSet::with_flipped_q_coefficient(std::size_t k, std::size_t i) const {
  require_positive(k, "with_flipped_q_coefficient");
  if (i > k) throw InvalidInput("with_flipped_q_coefficient: index exceeds k");
  GeneratorSet out = *this;
  auto it = out.overrides_.find(k);
  if (it == out.overrides_.end()) it = out.overrides_.emplace(k, q_coefficients(k)).first;
  it->second[i] = -it->second[i];
  return out;
}

CPoly GeneratorSet::p(std::size_t k) const {
  auto it = overrides_.find(k);
  if (it == overrides_.end()) return p_gen(k).poly;
  CPoly q = q_from_coefficients(it->second);
  return (q - swap_variables(q)).scale(2);
}

CharacterizationResult characterize_generator(std::size_t k) {
  require_positive(k, "characterize_generator");
  const unsigned d = static_cast<unsigned>(2 * k + 3);

  // Stage 1: vanishing on the axes and antisymmetry, on the coefficients
  // a_j of x1^j x2^(d-j).
  Matrix stage1;
  auto unit = [&](std::initializer_list<std::pair<unsigned, int>> entries) {
    Vector row(d + 1, 0);
    for (auto [j, v] : entries) row[j] += v;
    stage1.push_back(std::move(row));
  };
  unit({{d, 1}});
  unit({{0, 1}});
  for (unsigned j = 0; j <= d; ++j) unit({{j, 1}, {d - j, 1}});
  std::vector<CPoly> candidates;
  for (const Vector& v : nullspace(stage1, d + 1)) {
    CPoly p(2);
    for (unsigned j = 0; j <= d; ++j) p.add_term({j, d - j}, v[j]);
    candidates.push_back(std::move(p));
  }

  // Stage 2: conditions on the reduced polynomial.
  std::vector<std::vector<CPoly>> per_unknown;
  for (const CPoly& p : candidates) {
    CPoly r = reduce(p);
    const Slot at_zero[] = {zero_slot(), keep(0)};
    const Slot anti[] = {keep(0), negate(0)};
    CPoly reg = r.substitute(at_zero, 1) - r.substitute(anti, 1).scale(2);
    CPoly lap = r.derivative(0).derivative(0) - r.derivative(1).derivative(1);
    per_unknown.push_back({reg, lap});
  }
  Matrix stage2 = constraint_matrix(per_unknown);
  CharacterizationResult out;
  for (const Vector& t : nullspace(stage2, candidates.size())) {
    CPoly p(2);
    for (std::size_t j = 0; j < candidates.size(); ++j) p += candidates[j].scale(t[j]);
    out.basis.push_back(std::move(p));
  }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace blockmzv
