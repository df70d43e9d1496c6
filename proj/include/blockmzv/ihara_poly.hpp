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

#include "blockmzv/cpoly.hpp"

namespace blockmzv {

// Polynomial Ihara action f o g for f in m >= 2 variables and g in n >= 1
// variables; the result lives in m + n - 1 variables:
//   (-1)^{(m+1)(n+1)} sum_{i=1}^{n} f(x_i..x_{i+m-1}) / (x_i - x_{i+m-1})
//       * ( g(x_1..x_i, x_{i+m}..x_N) / x_i
//         - g(x_1..x_{i-1}, x_{i+m-1}..x_N) / x_{i+m-1} ).
// Every division is exact or throws InexactDivision.
CPoly ihara_poly_signed(const CPoly& f, const CPoly& g);

// The same action written for the undepth-signed encoding. With
// s = (-1)^{m+1}, j = i + m - 1 and barred variables s*x:
//   sum_{i=1}^{n} (-1)^{(m+1)(i-1)} f(x_i..x_j) / (x_i^2 - x_j^2)
//       * ( (1 + s x_j / x_i) g(sx_1..sx_i, x_{i+m}..x_N)
//         - (1 + s x_i / x_j) g(sx_1..sx_{i-1}, x_j..x_N) ).
CPoly ihara_poly_unsigned(const CPoly& f, const CPoly& g);

// signed(f, g) - signed(g, f), extended to a common number of variables.
CPoly ihara_bracket_poly(const CPoly& f, const CPoly& g);

}  // namespace blockmzv
