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

#include "blockmzv/ncpoly.hpp"

namespace blockmzv {

NCPoly NCPoly::of(const Word& w, const Rational& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> NCPoly::homogeneous_weight() const {
  if (terms_.empty()) return 0;
  std::size_t n = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != n) return std::nullopt;
  }
  return n;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::scale(const Rational& c) const {
  NCPoly out;
  if (c == 0) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, v * c);
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
  }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body = w.empty() ? "1" : w.str();
    out += mag == 1 ? body : to_string(mag) + "*" + body;
  }
  return out;
}

}  // namespace blockmzv
