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
#include <random>

#include "blockmzv/cpoly.hpp"
#include "blockmzv/errors.hpp"
#include "blockmzv/linalg.hpp"
#include "blockmzv/ncpoly.hpp"
#include "blockmzv/serialize.hpp"

using namespace blockmzv;

namespace {

CPoly x(std::size_t vars, std::size_t i) { return CPoly::variable(vars, i - 1); }

CPoly random_poly(std::mt19937& rng, std::size_t vars, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 4);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  CPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars);
    for (auto& v : e) v = exp(rng);
    p.add_term(e, make_rational(coeff(rng), den(rng)));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937& rng, std::size_t vars) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < vars; ++i) pt.push_back(make_rational(num(rng), den(rng)));
  return pt;
}

// Rank from the reduced row echelon form; an independent path from Bareiss.
std::size_t rref_rank(Matrix m) { return rref(m).size(); }

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidInput);
  CHECK(binomial(6, 2) == 15);
  CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
}

TEST_CASE("cpoly arithmetic examples") {
  CHECK((x(1, 1) + (-x(1, 1))).is_zero());
  CPoly prod = x(2, 1) * x(2, 2) * (x(2, 1) - x(2, 2));
  CHECK(to_string(prod) == "x1^2*x2 - x1*x2^2");
  CPoly sq = x(2, 1) * x(2, 1);
  CHECK(sq.scale(make_rational(3, 2)) == CPoly::monomial({2, 0}, make_rational(3, 2)));
  CHECK_THROWS_AS(x(1, 1) + x(2, 1), ArityMismatch);
  CHECK_THROWS_AS(x(1, 1) * x(2, 1), ArityMismatch);
}

TEST_CASE("multiplication is homogeneous of the summed degree") {
  CPoly a = x(3, 1) * x(3, 2) + x(3, 3) * x(3, 3);
  CPoly b = x(3, 1) * x(3, 1) * x(3, 2) - x(3, 3) * x(3, 3) * x(3, 3);
  CPoly c = a * b;
  CHECK(c.is_homogeneous());
  CHECK(c.degree() == 5);
}

TEST_CASE("ring axioms hold by evaluation at random points") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    CPoly a = random_poly(rng, n, 3, 4), b = random_poly(rng, n, 3, 4), c = random_poly(rng, n, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    auto pt = random_point(rng, n);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a - c).evaluate(pt) == a.evaluate(pt) - c.evaluate(pt));
  }
}

TEST_CASE("ncpoly ring axioms") {
  NCPoly a = NCPoly::of("0") + NCPoly::of("01", 2);
  NCPoly b = NCPoly::of("1") - NCPoly::of("10");
  NCPoly c = NCPoly::of("", 3) + NCPoly::of("11");
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a - a).is_zero());
  CHECK(to_string(NCPoly::of("01") - NCPoly::of("10", 2)) == "01 - 2*10");
}

TEST_CASE("exact division examples") {
  CPoly num = x(2, 1) * x(2, 1) * x(2, 2) - x(2, 1) * x(2, 2) * x(2, 2);
  CHECK(divide_exact(num, x(2, 1) - x(2, 2)) == x(2, 1) * x(2, 2));

  CPoly p3(2);
  p3.add_term({4, 1}, -2);
  p3.add_term({3, 2}, -1);
  p3.add_term({2, 3}, 1);
  p3.add_term({1, 4}, 2);
  CPoly r3 = divide_exact(p3, x(2, 1) * x(2, 2) * (x(2, 1) - x(2, 2)));
  CHECK(to_string(r3) == "-2*x1^2 - 3*x1*x2 - 2*x2^2");

  CHECK_THROWS_AS(divide_exact(x(2, 1) * x(2, 1), x(2, 2)), InexactDivision);
  CHECK_THROWS_AS(divide_exact(x(2, 1), CPoly(2)), InexactDivision);
  CHECK_THROWS_AS(divide_exact(x(2, 1) * x(2, 1) + x(2, 2), x(2, 1) - x(2, 2)), InexactDivision);
}

TEST_CASE("divide_exact inverts multiplication") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    CPoly a = random_poly(rng, n, 3, 5);
    CPoly b = random_poly(rng, n, 2, 3);
    if (b.is_zero()) continue;
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("substitution examples") {
  CPoly f = CPoly::monomial({2, 1});
  const Slot swap[] = {keep(1), keep(0)};
  CHECK(f.substitute(swap) == CPoly::monomial({1, 2}));
  const Slot neg[] = {negate(0), keep(1)};
  CHECK(f.substitute(neg) == f);
  const Slot diag[] = {keep(0), keep(0)};
  CHECK(CPoly::monomial({1, 1}).substitute(diag) == CPoly::monomial({2}));
  const Slot kill[] = {zero_slot(), keep(0)};
  CHECK(f.substitute(kill, 1).is_zero());
  const Slot odd[] = {negate(0), keep(1)};
  CHECK(CPoly::monomial({3, 1}).substitute(odd) == -CPoly::monomial({3, 1}));
  const Slot short_slots[] = {keep(0)};
  CHECK_THROWS_AS(f.substitute(short_slots), ArityMismatch);
}

TEST_CASE("substitution agrees with evaluation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    CPoly f = random_poly(rng, 3, 3, 5);
    std::vector<Slot> slots = {Slot{-1, 2}, keep(0), Slot{1, 2}};
    CPoly g = f.substitute(slots, 3);
    auto pt = random_point(rng, 3);
    std::vector<Rational> image = {-pt[2], pt[0], pt[2]};
    CHECK(g.evaluate(pt) == f.evaluate(image));
  }
}

TEST_CASE("compose and derivative") {
  CPoly f = CPoly::monomial({2, 1});
  CPoly y = x(1, 1);
  CPoly g = f.compose({y + CPoly::constant(1, 1), y});
  CHECK(g == y * y * y + y * y.scale(2) + y);
  CHECK(f.derivative(0) == CPoly::monomial({1, 1}, 2));
  CHECK(f.derivative(1).derivative(1).is_zero());
}

TEST_CASE("monomial parsing and printing") {
  CHECK(parse_monomial("x1^3*x2^2") == CPoly::monomial({3, 2}));
  CHECK(parse_monomial("x2") == CPoly::monomial({0, 1}));
  CHECK(parse_monomial("2*x1^4") == CPoly::monomial({4}, 2));
  try {
    parse_monomial("x1^3*y2");
    FAIL("expected an error");
  } catch (const InvalidInput& e) {
    CHECK(e.position() == 6u);
  }
  CHECK_THROWS_AS(parse_monomial("x0"), InvalidInput);
  CHECK_THROWS_AS(parse_monomial(""), InvalidInput);
  CHECK(to_string(CPoly(3)) == "0");
}

TEST_CASE("proportionality") {
  CPoly a = x(2, 1) - x(2, 2);
  CHECK(proportionality(a.scale(make_rational(-3, 2)), a) == make_rational(-3, 2));
  CHECK_FALSE(proportionality(a + x(2, 1), a).has_value());
  CHECK(proportionality(CPoly(2), a) == Rational(0));
}

TEST_CASE("rank examples") {
  CPoly a = x(2, 1) * x(2, 1), b = x(2, 2) * x(2, 2);
  CHECK(rank_over_q({a, b, a + b}) == 2);
  CHECK(rank_over_q({}) == 0);
  CPoly p3(2);
  p3.add_term({4, 1}, -2);
  p3.add_term({3, 2}, -1);
  p3.add_term({2, 3}, 1);
  p3.add_term({1, 4}, 2);
  const Slot swap[] = {keep(1), keep(0)};
  CHECK(rank_over_q({p3, p3.substitute(swap)}) == 1);
  CHECK_THROWS_AS(rank_over_q({a, x(2, 1)}), NotHomogeneous);
  CHECK_THROWS_AS(rank_over_q({a, x(3, 1) * x(3, 1)}), ArityMismatch);
}

TEST_CASE("Bareiss rank agrees with row reduction and is invariant") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> v(-4, 4), den(1, 3), pick(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 6, cols = 1 + trial % 7;
    Matrix m(rows, Vector(cols));
    for (auto& r : m) {
      for (auto& e : r) e = pick(rng) == 0 ? Rational(0) : make_rational(v(rng), den(rng));
    }
    // force some dependencies
    if (rows > 2) {
      for (std::size_t j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] * 3 - m[1][j];
    }
    const std::size_t r = rank(m);
    CHECK(r == rref_rank(m));
    Matrix scaled = m;
    for (std::size_t i = 0; i < rows; ++i) {
      for (auto& e : scaled[i]) e *= make_rational(static_cast<long>(i) + 2, 7);
    }
    CHECK(rank(scaled) == r);
    Matrix shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rank(shuffled) == r);
  }
}

TEST_CASE("nullspace and solve") {
  Matrix a = {{1, 1, 0}, {0, 1, 1}};
  auto ns = nullspace(a, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot == 0);
  }
  auto x0 = solve(a, {2, 3}, 3);
  REQUIRE(x0.has_value());
  CHECK((*x0)[0] + (*x0)[1] == 2);
  CHECK((*x0)[1] + (*x0)[2] == 3);
  Matrix inconsistent = {{1, 1}, {2, 2}};
  CHECK_FALSE(solve(inconsistent, {1, 3}, 2).has_value());
  CHECK(nullspace({}, 2).size() == 2);
}

TEST_CASE("serialization format and round trip") {
  CPoly p(2);
  p.add_term({1, 4}, 2);
  p.add_term({4, 1}, make_rational(-1, 2));
  auto j = to_json(p);
  CHECK(j.dump() == R"({"terms":[{"coeff":"2","exps":[1,4]},{"coeff":"-1/2","exps":[4,1]}],"vars":2})");
  CHECK(cpoly_from_json(j) == p);
  CHECK_THROWS_AS(cpoly_from_json(nlohmann::json{{"vars", 2}}), InvalidInput);
  CHECK_THROWS_AS(cpoly_from_json(nlohmann::json::parse(R"({"vars":2,"terms":[{"coeff":"1","exps":[1]}]})")),
                  InvalidInput);
}
