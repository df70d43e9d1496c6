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

#include "blockmzv/lie_basis.hpp"

#include <map>
#include <set>

#include "blockmzv/blocks.hpp"
#include "blockmzv/errors.hpp"
#include "blockmzv/linalg.hpp"

namespace blockmzv {

namespace {

bool is_lyndon(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.substr(i) <= s) return false;
  }
  return !s.empty();
}

}  // namespace

std::vector<Word> lyndon_words(std::size_t length) {
  std::vector<Word> out;
  if (length == 0) return out;
  // Duval's generation in lexicographic order
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == length) {
      std::string s;
      for (int c : w) s += static_cast<char>('0' + c);
      out.emplace_back(s);
    }
    while (w.size() < length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  return out;
}

NCPoly standard_bracketing(const Word& lyndon) {
  const std::string& s = lyndon.str();
  if (!is_lyndon(s)) throw InvalidInput("standard_bracketing: '" + s + "' is not a Lyndon word");
  if (s.size() == 1) return NCPoly::of(lyndon);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (is_lyndon(s.substr(i))) {
      return commutator(standard_bracketing(lyndon.substr(0, i)),
                        standard_bracketing(lyndon.substr(i)));
    }
  }
  throw InvalidInput("standard_bracketing: no Lyndon suffix");
}

std::vector<NCPoly> lie_basis(std::size_t length) {
  std::vector<NCPoly> out;
  for (const Word& w : lyndon_words(length)) out.push_back(standard_bracketing(w));
  return out;
}

std::optional<NCPoly> lift_to_lie(const CPoly& target) {
  if (!target.is_homogeneous() || target.is_zero() || target.degree() < 3) {
    throw InvalidInput("lift_to_lie: target must be a nonzero homogeneous polynomial of degree >= 3");
  }
  const std::size_t weight = static_cast<std::size_t>(target.degree()) - 2;
  const std::size_t level = target.var_count() - 1;
  const std::vector<NCPoly> basis = lie_basis(weight);

  std::map<Word, Rational> want;
  for (const auto& [e, c] : target.terms()) want[pi_bl_inverse(e)] = c;

  std::set<Word> rows;
  for (const auto& b : basis) {
    for (const auto& [w, c] : b.terms()) {
      if (framed_block_degree(w) == level) rows.insert(w);
    }
  }
  for (const auto& [w, c] : want) rows.insert(w);

  Matrix a;
  Vector rhs;
  for (const Word& w : rows) {
    Vector row(basis.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) row[j] = basis[j].coefficient(w);
    a.push_back(std::move(row));
    auto it = want.find(w);
    rhs.push_back(it == want.end() ? Rational(0) : it->second);
  }
  auto x = solve(a, rhs, basis.size());
  if (!x) return std::nullopt;
  NCPoly out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if ((*x)[j] != 0) out += basis[j].scale((*x)[j]);
  }
  return out;
}

}  // namespace blockmzv
