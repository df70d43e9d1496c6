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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blockmzv {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms. Throws InvalidInput on a zero denominator.
Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace blockmzv
