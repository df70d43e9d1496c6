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

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "blockmzv/blocks.hpp"
#include "blockmzv/cpoly.hpp"
#include "blockmzv/errors.hpp"
#include "blockmzv/freeness.hpp"
#include "blockmzv/generators.hpp"
#include "blockmzv/ihara_poly.hpp"
#include "blockmzv/linalg.hpp"
#include "blockmzv/relations.hpp"
#include "blockmzv/zalphabet.hpp"

using namespace blockmzv;

namespace {

using Point = std::vector<Rational>;

CPoly poly(const std::string& text, std::size_t vars) {
  CPoly out(vars);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    CPoly m = parse_monomial(text.substr(start, end - start)).extended(vars);
    out = out + m;
    start = end + 1;
  }
  return out;
}

Rational at(const CPoly& f, const Point& x) { return f.evaluate(x); }

Point pick(const Point& x, std::initializer_list<std::pair<std::size_t, std::size_t>> ranges) {
  Point out;
  for (auto [lo, hi] : ranges) {
    for (std::size_t i = lo; i < hi; ++i) out.push_back(x[i]);
  }
  return out;
}

Rational sign_of(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

// Pointwise value of the signed action, using rational division at the point.
Rational signed_at(const CPoly& f, const CPoly& g, const Point& x) {
  const std::size_t m = f.var_count(), n = g.var_count();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + m - 1;
    Rational front = at(f, pick(x, {{i, j + 1}})) / (x[i] - x[j]);
    Rational a = at(g, pick(x, {{0, i + 1}, {j + 1, x.size()}})) / x[i];
    Rational b = at(g, pick(x, {{0, i}, {j, x.size()}})) / x[j];
    total += front * (a - b);
  }
  return sign_of((m + 1) * (n + 1)) * total;
}

Rational unsigned_at(const CPoly& f, const CPoly& g, const Point& x) {
  const std::size_t m = f.var_count(), n = g.var_count();
  const Rational s = sign_of(m + 1);
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + m - 1;
    Point xa = pick(x, {{0, i + 1}, {j + 1, x.size()}});
    for (std::size_t t = 0; t <= i; ++t) xa[t] *= s;
    Point xb = pick(x, {{0, i}, {j, x.size()}});
    for (std::size_t t = 0; t < i; ++t) xb[t] *= s;
    Rational front = at(f, pick(x, {{i, j + 1}})) / (x[i] * x[i] - x[j] * x[j]);
    Rational a = (1 + s * x[j] / x[i]) * at(g, xa);
    Rational b = (1 + s * x[i] / x[j]) * at(g, xb);
    total += sign_of((m + 1) * i) * front * (a - b);
  }
  return total;
}

Rational reduced_bracket_at(const CPoly& r, const CPoly& q, const Point& x) {
  const std::size_t m = r.var_count(), n = q.var_count(), big = m + n - 1;
  auto window = [&](std::size_t start, std::size_t len) {
    Point out;
    for (std::size_t t = 0; t < len; ++t) out.push_back(x[(start + t) % big]);
    return out;
  };
  Rational total = 0;
  for (std::size_t i = 0; i < big; ++i) {
    total += at(r, window(i, m)) * (at(q, window(i + m, n)) - at(q, window(i + m - 1, n)));
  }
  return sign_of((m + 1) * (n + 1)) * total;
}

const std::vector<Point> kPoints = {
    {Rational(2), Rational(-3), Rational(5), Rational(7, 2), Rational(-1, 3)},
    {Rational(1, 2), Rational(4), Rational(-7), Rational(3), Rational(11, 5)},
    {Rational(-5), Rational(2, 3), Rational(9), Rational(-4), Rational(6)},
};

Point prefix(const Point& x, std::size_t n) { return Point(x.begin(), x.begin() + static_cast<long>(n)); }

// Lyndon words of given length over the odd letters >= 3, with letter sum w.
std::size_t brute_lyndon_count(std::size_t weight, std::size_t length) {
  std::size_t count = 0;
  std::vector<std::size_t> word;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (word.size() == length) {
      if (left != 0) return;
      for (std::size_t s = 1; s < length; ++s) {
        std::vector<std::size_t> rot(word.begin() + static_cast<long>(s), word.end());
        rot.insert(rot.end(), word.begin(), word.begin() + static_cast<long>(s));
        if (!(word < rot)) return;
      }
      ++count;
      return;
    }
    for (std::size_t a = 3; a <= left; a += 2) {
      word.push_back(a);
      rec(left - a);
      word.pop_back();
    }
  };
  rec(weight);
  return count;
}

}  // namespace

TEST_CASE("q coefficients and normalization") {
  CHECK(q_gen(1) == poly("-1/2*x1^3*x2^2 x1*x2^4", 2));
  CHECK(q_gen(2) == poly("-11/4*x1^5*x2^2 9/4*x1^3*x2^4 x1*x2^6", 2));
  for (std::size_t k = 1; k <= 8; ++k) {
    auto c = q_coefficients(k);
    REQUIRE(c.size() == k + 1);
    CHECK(c[0] == 1);
    Rational sum = 0;
    for (std::size_t i = 1; i <= k; ++i) sum += c[i];
    CHECK(c[0] == -2 * sum);
    CHECK(generator_normalization(k) == Rational(2));
    CHECK(q_from_coefficients(c) == q_gen(k));
  }
}

TEST_CASE("closed-form generators") {
  CHECK(p_gen(1).poly == poly("-2*x1^4*x2 -1*x1^3*x2^2 x1^2*x2^3 2*x1*x2^4", 2));
  CHECK(p_gen(2).poly ==
        poly("-2*x1^6*x2 -11/2*x1^5*x2^2 -9/2*x1^4*x2^3 9/2*x1^3*x2^4 11/2*x1^2*x2^5 2*x1*x2^6", 2));
  CHECK(p_gen(1).weight == 3);
  CHECK(p_gen(1).block_degree == 1);
  for (std::size_t k = 1; k <= 8; ++k) {
    const CPoly p = p_gen(k).poly;
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == static_cast<long>(2 * k + 3));
    const Rational scale = Rational(1) / Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k));
    for (const Point& x : kPoints) {
      const Rational a = x[0], b = x[1];
      Rational expected = a * b * (a - b) *
                          ((1 - Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(2 * k + 1))) * pow(a + b, 2 * k) -
                           pow(a - b, 2 * k)) *
                          scale;
      CHECK(at(p, prefix(x, 2)) == expected);
    }
    CHECK(p == (q_gen(k) - swap_variables(q_gen(k))).scale(2));
  }
}

TEST_CASE("generator characterisation") {
  for (std::size_t k = 1; k <= 7; ++k) {
    auto res = characterize_generator(k);
    CHECK(res.dimension == 1);
    REQUIRE(res.basis.size() == 1);
    CHECK(proportionality(res.basis[0], p_gen(k).poly).has_value());
  }
}

TEST_CASE("mutated generator set") {
  GeneratorSet base = GeneratorSet::closed_form();
  CHECK_FALSE(base.is_mutated());
  CHECK(base.p(2) == p_gen(2).poly);
  GeneratorSet mutated = base.with_flipped_q_coefficient(2, 1);
  CHECK(mutated.is_mutated());
  CHECK(mutated.p(1) == p_gen(1).poly);
  CHECK(mutated.p(2) != p_gen(2).poly);
  auto c = q_coefficients(2);
  c[1] = -c[1];
  CHECK(mutated.p(2) == (q_from_coefficients(c) - swap_variables(q_from_coefficients(c))).scale(2));
  CHECK_THROWS_AS(base.with_flipped_q_coefficient(2, 3), InvalidInput);
}

TEST_CASE("reduction") {
  CHECK(reduce(p_gen(1).poly) == poly("-2*x1^2 -3*x1*x2 -2*x2^2", 2));
  CHECK(reduce(p_gen(2).poly) == poly("-2*x1^4 -15/2*x1^3*x2 -12*x1^2*x2^2 -15/2*x1*x2^3 -2*x2^4", 2));
  CHECK_THROWS_AS(reduce(poly("x1^2*x2", 2)), InexactDivision);
  CHECK_THROWS_AS(reduce(poly("x1^2", 1)), ArityMismatch);
  for (std::size_t k = 1; k <= 5; ++k) {
    auto r = reduce(p_gen(k));
    CHECK(r.weight == 2 * k + 1);
    CHECK(r.block_degree == 1);
    CHECK(unreduce(r).poly == p_gen(k).poly);
  }
  CPoly r = poly("x1^2*x3 -3*x2^3 x1*x2*x3", 3);
  CHECK(reduce(unreduce(r)) == r);
}

TEST_CASE("signed and unsigned Ihara actions match pointwise formulas") {
  std::vector<CPoly> fs = {p_gen(1).poly, p_gen(2).poly, ihara_bracket_poly(p_gen(1).poly, p_gen(2).poly)};
  std::vector<CPoly> gs = {poly("x1^3", 1), p_gen(1).poly, poly("x1^2*x2*x3^2 -2*x1*x2^3*x3", 3)};
  for (const CPoly& f : fs) {
    for (const CPoly& g : gs) {
      CPoly sg = ihara_poly_signed(f, g);
      const std::size_t big = f.var_count() + g.var_count() - 1;
      CHECK(sg.var_count() == big);
      for (const Point& x : kPoints) CHECK(at(sg, prefix(x, big)) == signed_at(f, g, prefix(x, big)));
    }
  }
  std::vector<CPoly> phis = {depth_sign_transform(p_gen(1).poly, 3), depth_sign_transform(p_gen(2).poly, 5),
                             depth_sign_transform(fs[2], 8)};
  for (const CPoly& f : phis) {
    for (const CPoly& g : phis) {
      CPoly us = ihara_poly_unsigned(f, g);
      const std::size_t big = f.var_count() + g.var_count() - 1;
      CHECK(us.var_count() == big);
      for (const Point& x : kPoints) {
        if (big <= x.size()) CHECK(at(us, prefix(x, big)) == unsigned_at(f, g, prefix(x, big)));
      }
    }
  }
  CHECK_THROWS_AS(ihara_poly_signed(poly("x1^3", 1), p_gen(1).poly), ArityMismatch);
}

TEST_CASE("frozen bracket values") {
  const CPoly p3 = p_gen(1).poly, p5 = p_gen(2).poly;
  const Point x = {Rational(2), Rational(-3), Rational(5), Rational(7, 2)};
  const CPoly b35 = ihara_bracket_poly(p3, p5);
  CHECK(b35.terms().size() == 29);
  CHECK(at(b35, prefix(x, 3)) == 4460400);
  CHECK(at(reduce(b35), prefix(x, 3)) == 49560);
  CHECK(at(ihara_poly_signed(p3, p5), prefix(x, 3)) == 6979440);
  const CPoly b353 = ihara_bracket_poly(b35, p3);
  CHECK(b353.terms().size() == 196);
  CHECK(at(b353, x) == make_rational(68903413425, 64));
  auto gens = GeneratorSet::closed_form();
  CHECK(nested_bracket(gens, {1, 2}) == b35);
  CHECK(nested_bracket(gens, {1, 2, 1}) == b353);
  CHECK(tuple_label({1, 2, 1}) == "{{p3,p5},p3}");
}

TEST_CASE("reduced brackets") {
  std::vector<CPoly> members;
  for (auto& m : bracket_family(11, 3)) {
    if (!m.poly.is_zero()) members.push_back(m.poly);
  }
  REQUIRE(members.size() > 5);
  for (const CPoly& f : members) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const CPoly g = p_gen(k).poly;
      const CPoly rb = reduced_bracket(reduce(f), reduce(g));
      CHECK(reduce(ihara_bracket_poly(f, g)) == rb);
      CHECK(reduced_bracket_adjacent(reduce(g), reduce(f)) == reduced_bracket(reduce(g), reduce(f)));
      for (const Point& x : kPoints) {
        const std::size_t big = rb.var_count();
        if (big > x.size()) continue;
        CHECK(at(rb, prefix(x, big)) == reduced_bracket_at(reduce(f), reduce(g), prefix(x, big)));
      }
    }
  }
  ReducedElement r3 = reduce(p_gen(1)), r5 = reduce(p_gen(2));
  ReducedElement r35 = reduced_bracket(r3, r5);
  CHECK(r35.weight == 8);
  CHECK(r35.block_degree == 2);
  CHECK(r35.poly == reduced_bracket(r3.poly, r5.poly));
}

TEST_CASE("block shuffles") {
  CHECK(shuffle_set(4, 2).size() == 6);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t r = 1; r < n; ++r) {
      auto set = shuffle_set(n, r);
      std::size_t expected = 1;
      for (std::size_t i = 1; i <= r; ++i) expected = expected * (n - r + i) / i;
      CHECK(set.size() == expected);
      CHECK(std::is_sorted(set.begin(), set.end()));
      for (const auto& idx : set) {
        std::vector<std::size_t> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);
      }
    }
  }
  CHECK(block_shuffle_sum(poly("x1^2*x2", 2), 1) == poly("x1^2*x2 x1*x2^2", 2));
  CHECK(permute(poly("x1^2*x2^3*x3", 3), {2, 0, 1}) == poly("x1^3*x2*x3^2", 3));
  CHECK_THROWS_AS(block_shuffle_sum(poly("x1^2*x2", 2), 2), InvalidInput);
  for (auto& m : bracket_family(13, 3)) {
    for (std::size_t r = 1; r < m.poly.var_count(); ++r) CHECK(block_shuffle_sum(m.poly, r).is_zero());
  }
}

TEST_CASE("rotation, cyclic sums and reversal") {
  const CPoly f = poly("x1^2*x2", 3);
  CHECK(rotate(f, 1) == poly("x2^2*x3", 3));
  CHECK(rotate(f, 3) == f);
  CHECK(cyclic_sum(f) == poly("x1^2*x2 x2^2*x3 x1*x3^2", 3));
  CHECK(reverse_variables(f) == poly("x2*x3^2", 3));
  for (auto& m : bracket_family(13, 3)) CHECK(cyclic_sum(m.poly).is_zero());
}

TEST_CASE("sign vectors and the block differential") {
  auto v3 = sign_vectors(3);
  CHECK(v3.size() == 4);
  for (auto& v : v3) CHECK(v[0] == 1);
  CHECK(sign_vectors(1).size() == 1);
  CHECK(directional_derivative(poly("x1^2*x2", 2), {1, -1}) == poly("2*x1*x2 -1*x1^2", 2));
  CHECK(block_differential(reduce(p_gen(1).poly)).is_zero());
  CHECK(block_differential(poly("x1^3", 2)) == poly("6*x1", 2));
  CHECK(kernel_sum_membership(reduce(p_gen(1).poly)));
  CHECK_FALSE(kernel_sum_membership(poly("x1^3", 2)));
  for (auto& m : bracket_family(11, 3)) {
    if (m.poly.is_zero()) continue;
    CHECK(block_differential(reduce(m.poly)).is_zero());
  }
}

TEST_CASE("z alphabet") {
  ZPoly z = to_zword(poly("x1^3*x2^2", 2));
  CHECK(to_string(z) == "z3 z2");
  CHECK_THROWS_AS(to_zword(poly("x1^3", 2)), InvalidMonomial);
  ZPoly comm = {{{3, 5}, Rational(1)}, {{5, 3}, Rational(-1)}};
  CHECK(is_z_primitive(comm));
  CHECK_FALSE(is_z_primitive(ZPoly{{{3, 5}, Rational(1)}}));
  CHECK(z_cyclic(comm).empty());
  CHECK(z_antipode(ZPoly{{{3, 2}, Rational(1)}}) == ZPoly{{{2, 3}, Rational(1)}});
  CHECK(z_antipode(ZPoly{{{4}, Rational(2)}}) == ZPoly{{{4}, Rational(-2)}});
  for (auto& m : bracket_family(13, 3)) {
    ZPoly zm = to_zword(m.poly);
    CHECK(is_z_primitive(zm));
    CHECK(z_cyclic(zm).empty());
  }
}

TEST_CASE("generator tuples and Lyndon dimensions") {
  CHECK(generator_tuples(8, 2) == std::vector<std::vector<std::size_t>>{{1, 2}, {2, 1}});
  CHECK(generator_tuples(9, 2).empty());
  for (std::size_t w = 3; w <= 25; ++w) {
    for (std::size_t b = 1; b <= 5; ++b) CHECK(lyndon_dim(w, b) == static_cast<long>(brute_lyndon_count(w, b)));
  }
  CHECK(lyndon_dim(12, 2) == 2);
  CHECK(lyndon_dim(17, 3) == 5);
}

TEST_CASE("bracket spans have the free dimension in small weights") {
  for (std::size_t b = 1; b <= 3; ++b) {
    for (std::size_t w = 3; w <= 14; ++w) {
      auto span = bracket_span(w, b);
      std::size_t rk = span.empty() ? 0 : rank_over_q(span);
      CHECK(rk == lyndon_dim(w, b));
    }
  }
}
