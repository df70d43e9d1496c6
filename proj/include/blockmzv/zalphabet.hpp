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
#include <string>
#include <vector>

#include "blockmzv/cpoly.hpp"

namespace blockmzv {

// z_{i1} z_{i2} ... z_{in}, letters >= 1.
using ZWord = std::vector<unsigned>;
using ZPoly = std::map<ZWord, Rational>;

// x1^{i1} ... xn^{in} -> z_{i1} ... z_{in}. Throws InvalidMonomial on a
// zero exponent.
ZPoly to_zword(const CPoly& f);

// "z3 z2"; a linear combination prints as "z3 z2 - 2*z2 z3".
std::string to_string(const ZWord& w);
std::string to_string(const ZPoly& p);

// Primitivity for the coshuffle coproduct with every z letter primitive.
bool is_z_primitive(const ZPoly& p);

// Sum over the cyclic rotations of each word.
ZPoly z_cyclic(const ZPoly& p);

// Antipode: z_i -> -z_i extended as an antihomomorphism, i.e.
// w -> (-1)^{|w|} reversed(w).
ZPoly z_antipode(const ZPoly& p);

}  // namespace blockmzv
