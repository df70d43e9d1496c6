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
#include <vector>

#include "blockmzv/cpoly.hpp"
#include "blockmzv/generators.hpp"

namespace blockmzv {

// Ordered tuples (k_1, ..., k_b), k_i >= 1, with sum_i (2 k_i + 1) == weight,
// in lexicographic order.
std::vector<std::vector<std::size_t>> generator_tuples(std::size_t weight, std::size_t count);

// Dimension of the (weight, count) piece of the free Lie algebra on one
// generator in each odd weight >= 3, by the necklace formula summed over
// generator contents.
Integer lyndon_dim(std::size_t weight, std::size_t block_degree);

// Left-nested signed brackets {..{p_{k1}, p_{k2}}, ..., p_{kb}}.
CPoly nested_bracket(const GeneratorSet& gens, const std::vector<std::size_t>& tuple);

// Left-nested reduced brackets of the reduced generators, one per tuple of
// generator_tuples(weight, block_degree).
std::vector<CPoly> bracket_span(std::size_t weight, std::size_t block_degree,
                                const GeneratorSet& gens = GeneratorSet::closed_form());

struct FamilyMember {
  std::vector<std::size_t> tuple;
  std::size_t weight = 0;
  CPoly poly;
};

// Every left-nested signed bracket with weight <= max_weight and
// 1 <= count <= max_block_degree, ordered by count, then lexicographically by
// tuple. Zero brackets are included.
std::vector<FamilyMember> bracket_family(std::size_t max_weight, std::size_t max_block_degree,
                                         const GeneratorSet& gens = GeneratorSet::closed_form());

// "{{p3,p5},p3}" style label for a tuple.
std::string tuple_label(const std::vector<std::size_t>& tuple);

}  // namespace blockmzv
