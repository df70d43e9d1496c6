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

#include "blockmzv/wordops.hpp"

#include "blockmzv/blocks.hpp"
#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

void shuffle_into(const std::string& u, std::size_t i, const std::string& v, std::size_t j,
                  std::string& prefix, const Rational& c, NCPoly& out) {
  if (i == u.size() || j == v.size()) {
    out.add_term(Word(prefix + u.substr(i) + v.substr(j)), c);
    return;
  }
  prefix.push_back(u[i]);
  shuffle_into(u, i + 1, v, j, prefix, c, out);
  prefix.back() = v[j];
  shuffle_into(u, i, v, j + 1, prefix, c, out);
  prefix.pop_back();
}

std::size_t leading_zeros(const Word& w) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == '0') ++n;
  return n;
}

}  // namespace

NCPoly shuffle(const Word& u, const Word& v) {
  NCPoly out;
  std::string prefix;
  shuffle_into(u.str(), 0, v.str(), 0, prefix, 1, out);
  return out;
}

NCPoly shuffle(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) out += shuffle(u, v).scale(cu * cv);
  }
  return out;
}

NCPoly star(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(w.reversed(), w.size() % 2 ? Rational(-c) : c);
  return out;
}

std::map<std::pair<Word, Word>, Rational> reduced_coshuffle(const NCPoly& p) {
  std::map<std::pair<Word, Word>, Rational> out;
  for (const auto& [w, c] : p.terms()) {
    const std::size_t n = w.size();
    if (n > 20) throw ResourceLimit("coshuffle of words longer than 20 letters");
    const std::string& s = w.str();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::string left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? left : right) += s[i];
      auto key = std::make_pair(Word(left), Word(right));
      auto [it, inserted] = out.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

bool is_lie_element(const NCPoly& p) {
  auto weight = p.homogeneous_weight();
  if (!weight) throw NotHomogeneous("is_lie_element: words of different lengths");
  if (p.is_zero()) return true;
  if (*weight == 0) return false;
  return reduced_coshuffle(p).empty();
}

NCPoly ihara_word_unchecked(const NCPoly& sigma, const NCPoly& g) {
  const NCPoly sigma_star = star(sigma);
  NCPoly out;
  for (const auto& [w, c] : g.terms()) {
    // Peel e0^n e1 prefixes; `lead` collects the e0^n e1 ... e0^n e1 prefix
    // already consumed.
    Word lead;
    Word rest = w;
    while (true) {
      std::size_t n = leading_zeros(rest);
      Word zeros = rest.substr(0, n);
      if (n == rest.size()) {
        for (const auto& [s, cs] : sigma.terms()) out.add_term(lead + zeros + s, c * cs);
        break;
      }
      Word u = rest.substr(n + 1);
      Word one("1");
      for (const auto& [s, cs] : sigma.terms()) out.add_term(lead + zeros + s + one + u, c * cs);
      for (const auto& [s, cs] : sigma_star.terms()) out.add_term(lead + zeros + one + s + u, c * cs);
      lead = lead + zeros + one;
      rest = u;
    }
  }
  return out;
}

NCPoly ihara_word(const NCPoly& sigma, const NCPoly& g) {
  if (!is_lie_element(sigma)) throw NotLieElement("ihara_word: sigma is not a Lie element");
  return ihara_word_unchecked(sigma, g);
}

NCPoly ihara_bracket_word(const NCPoly& f, const NCPoly& g) {
  if (!is_lie_element(f) || !is_lie_element(g)) {
    throw NotLieElement("ihara_bracket_word: arguments must be Lie elements");
  }
  return ihara_word_unchecked(f, g) - ihara_word_unchecked(g, f);
}

std::vector<Delta1Term> delta1(const Word& w) {
  if (w.empty()) throw InvalidInput("delta1: empty word");
  std::vector<Delta1Term> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back({w[i], w.without(i)});
  return out;
}

std::map<Delta1Term, Rational> graded_delta1(const NCPoly& p) {
  std::map<Delta1Term, Rational> out;
  if (p.is_zero()) return out;
  const std::size_t n = framed_block_degree(p.terms().begin()->first);
  for (const auto& [w, c] : p.terms()) {
    if (framed_block_degree(w) != n) {
      throw NotHomogeneous("graded_delta1: mixed framed block degrees");
    }
  }
  if (n == 0) return out;
  for (const auto& [w, c] : p.terms()) {
    for (auto& t : delta1(w)) {
      if (framed_block_degree(t.rest) != n - 1) continue;
      auto [it, inserted] = out.try_emplace(t, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Word FormalII::as_word() const {
  return Word(std::string(1, lower)) + body + Word(std::string(1, upper));
}

std::string to_string(const FormalII& s) {
  std::string out = "I(";
  out += s.lower;
  out += ";";
  for (std::size_t i = 0; i < s.body.size(); ++i) {
    if (i) out += ",";
    out += s.body[i];
  }
  if (!s.body.empty()) out += ";";
  out += s.upper;
  return out + ")";
}

std::vector<TensorTerm> infinitesimal_coaction(std::size_t r, const FormalII& s) {
  if (r == 0) throw InvalidInput("infinitesimal_coaction: r must be at least 1");
  const std::size_t n = s.body.size();
  if (n < 2 * r + 1) {
    throw InvalidInput("infinitesimal_coaction: weight " + std::to_string(n) + " is below " +
                       std::to_string(2 * r + 1));
  }
  const std::string a = s.as_word().str();
  std::vector<TensorTerm> out;
  for (std::size_t p = 0; p + 2 * r + 1 <= n; ++p) {
    const std::size_t q = p + 2 * r + 2;
    if (a[p] == a[q]) continue;
    FormalII left{a[p], Word(a.substr(p + 1, 2 * r + 1)), a[q]};
    FormalII right{a[0], Word(a.substr(1, p) + a.substr(q, n + 1 - q)), a[n + 1]};
    out.push_back({std::move(left), std::move(right), 1});
  }
  return out;
}

}  // namespace blockmzv
