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

#include "blockmzv/zalphabet.hpp"

#include <algorithm>
#include <utility>

#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

void accumulate(ZPoly& p, const ZWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

}  // namespace

ZPoly to_zword(const CPoly& f) {
  ZPoly out;
  for (const auto& [e, c] : f.terms()) {
    for (unsigned x : e) {
      if (x == 0) throw InvalidMonomial("to_zword: monomial with a zero exponent");
    }
    accumulate(out, ZWord(e.begin(), e.end()), c);
  }
  return out;
}

std::string to_string(const ZWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += "z" + std::to_string(w[i]);
  }
  return out;
}

std::string to_string(const ZPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += mag == 1 ? to_string(w) : to_string(mag) + "*" + to_string(w);
  }
  return out;
}

bool is_z_primitive(const ZPoly& p) {
  std::map<std::pair<ZWord, ZWord>, Rational> coproduct;
  for (const auto& [w, c] : p) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    if (n > 20) throw ResourceLimit("is_z_primitive: word too long");
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      ZWord left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? left : right).push_back(w[i]);
      auto key = std::make_pair(std::move(left), std::move(right));
      auto [it, inserted] = coproduct.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) coproduct.erase(it);
      }
    }
  }
  return coproduct.empty();
}

ZPoly z_cyclic(const ZPoly& p) {
  ZPoly out;
  for (const auto& [w, c] : p) {
    ZWord r = w;
    for (std::size_t s = 0; s < w.size(); ++s) {
      accumulate(out, r, c);
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }
  return out;
}

ZPoly z_antipode(const ZPoly& p) {
  ZPoly out;
  for (const auto& [w, c] : p) {
    accumulate(out, ZWord(w.rbegin(), w.rend()), w.size() % 2 ? Rational(-c) : c);
  }
  return out;
}

}  // namespace blockmzv
