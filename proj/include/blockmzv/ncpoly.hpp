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

#include <map>
#include <optional>
#include <string>

#include "blockmzv/rational.hpp"
#include "blockmzv/word.hpp"

namespace blockmzv {

// Finite Q-linear combination of words.
class NCPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  NCPoly() = default;
  static NCPoly of(const Word& w, const Rational& c = 1);
  // Convenience: "01" -> the single word 01.
  static NCPoly of(std::string_view w, const Rational& c = 1) { return of(Word(w), c); }
  static NCPoly letter(char l) { return of(Word(std::string(1, l))); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;

  // The common length of all words, or nullopt if lengths differ.
  // The zero polynomial reports 0.
  std::optional<std::size_t> homogeneous_weight() const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly scale(const Rational& c) const;
  NCPoly operator-() const { return scale(-1); }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  // Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  TermMap terms_;
};

// [a, b] = ab - ba.
NCPoly commutator(const NCPoly& a, const NCPoly& b);

// e.g. "01 - 2*10"; the empty word prints as "1".
std::string to_string(const NCPoly& p);

}  // namespace blockmzv
