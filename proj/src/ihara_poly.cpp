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

#include "blockmzv/ihara_poly.hpp"

#include <vector>

#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

// Shared kernel. `bar` is the sign applied to the leading g-variables,
// `alternate` switches on the (-1)^{(m+1)(i-1)} term sign.
CPoly ihara_sum(const CPoly& f, const CPoly& g, int bar, bool alternate) {
  const std::size_t m = f.var_count();
  const std::size_t n = g.var_count();
  if (m < 2) throw ArityMismatch("polynomial Ihara action needs f in at least 2 variables");
  if (n < 1) throw ArityMismatch("polynomial Ihara action needs g in at least 1 variable");
  const std::size_t total = m + n - 1;

  CPoly den(m);
  den.add_term([&] { Exponents e(m, 0); e[0] = 1; return e; }(), 1);
  den.add_term([&] { Exponents e(m, 0); e[m - 1] = 1; return e; }(), -bar);
  const CPoly fr = divide_exact(f, den);

  CPoly out(total);
  std::vector<Slot> fslots(m), ga(n), gb(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + m - 1;
    for (std::size_t t = 0; t < m; ++t) fslots[t] = keep(i + t);
    for (std::size_t t = 0; t < n; ++t) {
      ga[t] = t <= i ? Slot{bar, t} : keep(t + m - 1);
      gb[t] = t < i ? Slot{bar, t} : keep(t + m - 1);
    }
    CPoly a = g.substitute(ga, total).divide_by_variable(i);
    CPoly b = g.substitute(gb, total).divide_by_variable(j);
    CPoly term = fr.substitute(fslots, total) * (bar > 0 ? a - b : a + b);
    const bool negative = alternate && (m + 1) % 2 == 1 && i % 2 == 1;
    out += negative ? -term : term;
  }
  return out;
}

}  // namespace

CPoly ihara_poly_signed(const CPoly& f, const CPoly& g) {
  CPoly out = ihara_sum(f, g, 1, false);
  const std::size_t m = f.var_count();
  const std::size_t n = g.var_count();
  return ((m + 1) * (n + 1)) % 2 ? -out : out;
}

CPoly ihara_poly_unsigned(const CPoly& f, const CPoly& g) {
  const int s = f.var_count() % 2 == 1 ? 1 : -1;
  return ihara_sum(f, g, s, true);
}

CPoly ihara_bracket_poly(const CPoly& f, const CPoly& g) {
  return ihara_poly_signed(f, g) - ihara_poly_signed(g, f);
}

}  // namespace blockmzv
