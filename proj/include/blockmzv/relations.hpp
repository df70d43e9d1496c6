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

// r = f / (x1 ... xn (x1 - xn)), stored with the weight and block degree of f.
struct ReducedElement {
  CPoly poly;
  std::size_t weight = 0;
  std::size_t block_degree = 0;
};

// Throws InexactDivision when f lacks the factor, ArityMismatch when n < 2.
CPoly reduce(const CPoly& f);
CPoly unreduce(const CPoly& r);
ReducedElement reduce(const BGElement& f);
BGElement unreduce(const ReducedElement& r);

// Reduced bracket of r (m variables) and q (n variables), N = m + n - 1:
//   (-1)^{(m+1)(n+1)} sum_{i=1}^{N} r(x_i..x_{i+m-1})
//       * ( q(x_{i+m}..x_{i+m+n-1}) - q(x_{i+m-1}..x_{i+m+n-2}) ),
// indices mod N. Agrees with reduce(ihara_bracket_poly(f, g)).
CPoly reduced_bracket(const CPoly& r, const CPoly& q);
ReducedElement reduced_bracket(const ReducedElement& r, const ReducedElement& q);

// The two-variable form for r in 2 variables:
//   (-1)^{n+1} sum_{i=1}^{N} r(x_i, x_{i+1}) ( q(x without x_{i+1}) - q(x without x_i) ),
// with x_{N+1} = x_1. Equals reduced_bracket when q is cyclically invariant.
CPoly reduced_bracket_adjacent(const CPoly& r, const CPoly& q);

// Permutations idx with f(x_{idx[0]}, ..., x_{idx[n-1]}) ranging over the
// (r, n-r) shuffles, split positions in ascending lexicographic order.
std::vector<std::vector<std::size_t>> shuffle_set(std::size_t n, std::size_t r);

// f(x_{idx[0]+1}, ..., x_{idx[n-1]+1}).
CPoly permute(const CPoly& f, const std::vector<std::size_t>& idx);

// Sum over shuffle_set(n, r). Throws InvalidInput unless 1 <= r < n.
CPoly block_shuffle_sum(const CPoly& f, std::size_t r);

// f(x_{1+s}, ..., x_{n+s}), indices mod n.
CPoly rotate(const CPoly& f, std::size_t s);
CPoly cyclic_sum(const CPoly& f);
// f(x_n, ..., x_1).
CPoly reverse_variables(const CPoly& f);

// All v in {+1,-1}^n with v_1 = +1; 2^{n-1} of them.
std::vector<std::vector<int>> sign_vectors(std::size_t n);

// sum_j v_j d f / d x_j.
CPoly directional_derivative(const CPoly& f, const std::vector<int>& v);

// Product of directional_derivative over all sign vectors.
CPoly block_differential(const CPoly& r);

// Whether r lies in the sum over sign vectors v of ker(sum_j v_j d/dx_j),
// decided in r's degree by an exact membership test.
bool kernel_sum_membership(const CPoly& r);

}  // namespace blockmzv
