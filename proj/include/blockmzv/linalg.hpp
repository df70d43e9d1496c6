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
#include "blockmzv/rational.hpp"

namespace blockmzv {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows may be empty only if cols == 0

// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
// integers; all intermediate divisions are exact.
std::size_t rank(const Matrix& rows);

// Reduced row echelon form over Q; returns pivot column per nonzero row.
std::vector<std::size_t> rref(Matrix& rows);

// Basis of {x : A x = 0}, one vector per free column. `cols` is needed when
// A has no rows.
std::vector<Vector> nullspace(const Matrix& a, std::size_t cols);

// Some x with A x = b (free variables set to 0), or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols);

// Coefficient matrix of a family of polynomials against the sorted union of
// their monomials. `monomials` receives the column labels when non-null.
Matrix coefficient_matrix(const std::vector<CPoly>& polys,
                          std::vector<Exponents>* monomials = nullptr);

// Rank over Q of homogeneous polynomials sharing var count and degree.
// Zero polynomials are allowed and contribute nothing. Throws ArityMismatch
// or NotHomogeneous on mixed inputs.
std::size_t rank_over_q(const std::vector<CPoly>& polys);

}  // namespace blockmzv
