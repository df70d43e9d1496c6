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
#include <vector>

#include "blockmzv/cpoly.hpp"
#include "blockmzv/ncpoly.hpp"
#include "blockmzv/word.hpp"

namespace blockmzv {

// First letter and block lengths, rendered "(0; 3,4,1)".
struct BlockTuple {
  char epsilon = '0';
  std::vector<unsigned> lengths;

  friend bool operator==(const BlockTuple&, const BlockTuple&) = default;
};

std::string to_string(const BlockTuple& t);

// Minimal factorisation into alternating words; neighbouring pieces meet at
// an equal pair of letters. Throws InvalidInput on the empty word.
std::vector<Word> block_decompose(const Word& w);

// Number of equal adjacent pairs.
std::size_t block_degree(const Word& w);

// Block degree of 0w1. Defined for the empty word as well (it is 0).
std::size_t framed_block_degree(const Word& w);

BlockTuple bl(const Word& w);
Word bl_inverse(const BlockTuple& t);

// x1^l1 ... xn^ln where (0; l1, ..., ln) = bl(0w1).
Exponents pi_bl_exponents(const Word& w);
CPoly pi_bl(const Word& w);

// Throws InvalidMonomial if the exponents are not the image of a nonempty word.
Word pi_bl_inverse(const Exponents& exps);
// Accepts a single term with coefficient 1.
Word pi_bl_inverse(const CPoly& monomial);

std::size_t depth_of_monomial(const Exponents& exps);

// (-1)^ceil(weight/2) f(-x1, x2, -x3, ...). f must be homogeneous of
// degree weight + 2 (or zero).
CPoly depth_sign_transform(const CPoly& f, std::size_t weight);

// Reverse and swap 0 <-> 1.
Word duality(const Word& w);

// Sequences over {2, 3} summing to n with exactly m threes.
Integer hoffman_count(std::size_t n, std::size_t m);

// Splits a word combination into its pi_bl images, keyed by variable count.
std::map<std::size_t, CPoly> to_block_polys(const NCPoly& p);

// Inverse of to_block_polys on a single polynomial.
NCPoly from_block_poly(const CPoly& f);

}  // namespace blockmzv
