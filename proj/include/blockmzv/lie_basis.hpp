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
#include <optional>
#include <vector>

#include "blockmzv/cpoly.hpp"
#include "blockmzv/ncpoly.hpp"
#include "blockmzv/word.hpp"

namespace blockmzv {

// Lyndon words of the given length over 0 < 1, in lexicographic order.
std::vector<Word> lyndon_words(std::size_t length);

// Standard bracketing of a Lyndon word, expanded into words.
NCPoly standard_bracketing(const Word& lyndon);

// Standard bracketings of all Lyndon words of the given length.
std::vector<NCPoly> lie_basis(std::size_t length);

// A Lie element of weight deg(target) - 2 whose words of framed block degree
// var_count(target) - 1 map under pi_bl exactly onto target. Returns nullopt
// when no such element exists.
std::optional<NCPoly> lift_to_lie(const CPoly& target);

}  // namespace blockmzv
