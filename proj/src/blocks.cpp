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

#include "blockmzv/blocks.hpp"

#include <numeric>

#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

char flip(char c) { return c == '0' ? '1' : '0'; }

std::vector<unsigned> block_lengths(const std::string& s) {
  std::vector<unsigned> lengths{1};
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) {
      lengths.push_back(1);
    } else {
      ++lengths.back();
    }
  }
  return lengths;
}

std::size_t equal_pairs(const std::string& s) {
  std::size_t n = 0;
  for (std::size_t i = 1; i < s.size(); ++i) n += s[i] == s[i - 1];
  return n;
}

}  // namespace

std::string to_string(const BlockTuple& t) {
  std::string out = "(";
  out += t.epsilon;
  out += "; ";
  for (std::size_t i = 0; i < t.lengths.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.lengths[i]);
  }
  return out + ")";
}

std::vector<Word> block_decompose(const Word& w) {
  if (w.empty()) throw InvalidInput("block_decompose: empty word");
  std::vector<Word> pieces;
  std::size_t start = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      pieces.push_back(w.substr(start, i - start));
      start = i;
    }
  }
  pieces.push_back(w.substr(start));
  return pieces;
}

std::size_t block_degree(const Word& w) {
  if (w.empty()) throw InvalidInput("block_degree: empty word");
  return equal_pairs(w.str());
}

std::size_t framed_block_degree(const Word& w) { return equal_pairs("0" + w.str() + "1"); }

BlockTuple bl(const Word& w) {
  if (w.empty()) throw InvalidInput("bl: empty word");
  return {w.front(), block_lengths(w.str())};
}

Word bl_inverse(const BlockTuple& t) {
  if (t.epsilon != '0' && t.epsilon != '1') throw InvalidInput("bl_inverse: first letter must be 0 or 1");
  if (t.lengths.empty()) throw InvalidInput("bl_inverse: no blocks");
  std::string s;
  char cur = t.epsilon;
  for (unsigned l : t.lengths) {
    if (l == 0) throw InvalidInput("bl_inverse: block length 0");
    for (unsigned j = 0; j < l; ++j) {
      s += cur;
      if (j + 1 < l) cur = flip(cur);
    }
  }
  return Word(s);
}

Exponents pi_bl_exponents(const Word& w) {
  if (w.empty()) throw InvalidInput("pi_bl: empty word");
  return block_lengths("0" + w.str() + "1");
}

CPoly pi_bl(const Word& w) { return CPoly::monomial(pi_bl_exponents(w)); }

Word pi_bl_inverse(const Exponents& exps) {
  if (exps.empty()) throw InvalidMonomial("pi_bl_inverse: constant monomial");
  for (unsigned e : exps) {
    if (e == 0) throw InvalidMonomial("pi_bl_inverse: every variable must occur");
  }
  Word framed = bl_inverse({'0', {exps.begin(), exps.end()}});
  if (framed.back() != '1') {
    throw InvalidMonomial("pi_bl_inverse: block lengths force a final letter 0");
  }
  if (framed.size() < 3) throw InvalidMonomial("pi_bl_inverse: monomial of the empty word");
  return framed.substr(1, framed.size() - 2);
}

Word pi_bl_inverse(const CPoly& monomial) {
  if (monomial.term_count() != 1 || monomial.terms().begin()->second != 1) {
    throw InvalidMonomial("pi_bl_inverse: expected a single monomial with coefficient 1");
  }
  return pi_bl_inverse(monomial.terms().begin()->first);
}

std::size_t depth_of_monomial(const Exponents& exps) { return pi_bl_inverse(exps).depth(); }

CPoly depth_sign_transform(const CPoly& f, std::size_t weight) {
  if (!f.is_homogeneous()) throw NotHomogeneous("depth_sign_transform: input is not homogeneous");
  if (!f.is_zero() && static_cast<std::size_t>(f.degree()) != weight + 2) {
    throw NotHomogeneous("depth_sign_transform: degree is not weight + 2");
  }
  std::vector<Slot> slots(f.var_count());
  for (std::size_t j = 0; j < slots.size(); ++j) slots[j] = {j % 2 == 0 ? -1 : 1, j};
  CPoly g = f.substitute(slots, f.var_count());
  return ((weight + 1) / 2) % 2 ? -g : g;
}

Word duality(const Word& w) {
  std::string s;
  for (auto it = w.str().rbegin(); it != w.str().rend(); ++it) s += flip(*it);
  return Word(s);
}

Integer hoffman_count(std::size_t n, std::size_t m) {
  // c[a][b]: sequences summing to a with b threes
  std::vector<std::vector<Integer>> c(n + 1, std::vector<Integer>(m + 1, 0));
  c[0][0] = 1;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 0; b <= m; ++b) {
      if (a >= 2) c[a][b] += c[a - 2][b];
      if (a >= 3 && b >= 1) c[a][b] += c[a - 3][b - 1];
    }
  }
  return c[n][m];
}

std::map<std::size_t, CPoly> to_block_polys(const NCPoly& p) {
  std::map<std::size_t, CPoly> out;
  for (const auto& [w, c] : p.terms()) {
    Exponents e = pi_bl_exponents(w);
    auto [it, inserted] = out.try_emplace(e.size(), e.size());
    it->second.add_term(e, c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

NCPoly from_block_poly(const CPoly& f) {
  NCPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(pi_bl_inverse(e), c);
  return out;
}

}  // namespace blockmzv
