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
#include <string>
#include <utility>
#include <vector>

#include "blockmzv/ncpoly.hpp"
#include "blockmzv/word.hpp"

namespace blockmzv {

NCPoly shuffle(const Word& u, const Word& v);
NCPoly shuffle(const NCPoly& a, const NCPoly& b);

// Each word reversed, with sign (-1)^length.
NCPoly star(const NCPoly& p);

// Coshuffle coproduct, restricted to the tensor terms u (x) v with both
// sides nonempty.
std::map<std::pair<Word, Word>, Rational> reduced_coshuffle(const NCPoly& p);

// True iff p is primitive for the coshuffle coproduct. Throws NotHomogeneous
// when p mixes weights.
bool is_lie_element(const NCPoly& p);

// Linearised Ihara action sigma o g. Recursion on g:
//   sigma o e0^n          = e0^n sigma
//   sigma o e0^n e1 u     = e0^n sigma e1 u + e0^n e1 sigma* u + e0^n e1 (sigma o u)
// Throws NotLieElement if sigma is not Lie.
NCPoly ihara_word(const NCPoly& sigma, const NCPoly& g);

// Same recursion without the Lie check.
NCPoly ihara_word_unchecked(const NCPoly& sigma, const NCPoly& g);

// ihara_word(f, g) - ihara_word(g, f).
NCPoly ihara_bracket_word(const NCPoly& f, const NCPoly& g);

struct Delta1Term {
  char letter;
  Word rest;

  friend auto operator<=>(const Delta1Term&, const Delta1Term&) = default;
};

// (w_i, w without position i) for every i, with multiplicity.
std::vector<Delta1Term> delta1(const Word& w);

// Sum of delta1 over p, keeping only the terms whose right factor has framed
// block degree exactly one less than that of p. Throws NotHomogeneous if the
// words of p have different framed block degrees.
std::map<Delta1Term, Rational> graded_delta1(const NCPoly& p);

// Formal symbol I(lower; body; upper).
struct FormalII {
  char lower = '0';
  Word body;
  char upper = '1';

  // lower, body..., upper as one word.
  Word as_word() const;
  friend bool operator==(const FormalII&, const FormalII&) = default;
};

// "I(0;1,0,1;1)"; an empty body prints as "I(0;1)".
std::string to_string(const FormalII& s);

struct TensorTerm {
  FormalII left;
  FormalII right;
  Rational coefficient;
};

// The terms of D_{2r+1}(s), dropping those whose left factor has equal
// endpoints. Throws InvalidInput when r == 0 or the weight is below 2r+1.
std::vector<TensorTerm> infinitesimal_coaction(std::size_t r, const FormalII& s);

}  // namespace blockmzv
