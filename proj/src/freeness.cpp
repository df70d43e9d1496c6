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

#include "blockmzv/freeness.hpp"

#include <map>
#include <numeric>

#include "blockmzv/errors.hpp"
#include "blockmzv/ihara_poly.hpp"
#include "blockmzv/relations.hpp"

namespace blockmzv {

namespace {

void tuples_into(std::size_t remaining, std::size_t count, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (count == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::size_t k = 1; 2 * k + 1 <= remaining; ++k) {
    cur.push_back(k);
    tuples_into(remaining - (2 * k + 1), count - 1, cur, out);
    cur.pop_back();
  }
}

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Integer factorial(std::size_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Lyndon words with the given letter multiplicities.
Integer necklace_count(const std::vector<std::size_t>& mult) {
  const std::size_t total = std::accumulate(mult.begin(), mult.end(), std::size_t{0});
  std::size_t g = 0;
  for (auto m : mult) g = std::gcd(g, m);
  Integer sum = 0;
  for (std::size_t d = 1; d <= g; ++d) {
    if (g % d) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Integer term = factorial(total / d);
    for (auto m : mult) term /= factorial(m / d);
    sum += mu * term;
  }
  return sum / total;
}

}  // namespace

std::vector<std::vector<std::size_t>> generator_tuples(std::size_t weight, std::size_t count) {
  std::vector<std::vector<std::size_t>> out;
  if (count == 0) return out;
  std::vector<std::size_t> cur;
  tuples_into(weight, count, cur, out);
  return out;
}

Integer lyndon_dim(std::size_t weight, std::size_t block_degree) {
  if (block_degree == 0) return 0;
  Integer total = 0;
  for (const auto& t : generator_tuples(weight, block_degree)) {
    if (!std::is_sorted(t.begin(), t.end())) continue;
    std::map<std::size_t, std::size_t> content;
    for (auto k : t) ++content[k];
    std::vector<std::size_t> mult;
    for (const auto& [k, m] : content) mult.push_back(m);
    total += necklace_count(mult);
  }
  return total;
}

CPoly nested_bracket(const GeneratorSet& gens, const std::vector<std::size_t>& tuple) {
  if (tuple.empty()) throw InvalidInput("nested_bracket: empty tuple");
  CPoly acc = gens.p(tuple.front());
  for (std::size_t i = 1; i < tuple.size(); ++i) acc = ihara_bracket_poly(acc, gens.p(tuple[i]));
  return acc;
}

std::vector<CPoly> bracket_span(std::size_t weight, std::size_t block_degree, const GeneratorSet& gens) {
  std::vector<CPoly> out;
  std::map<std::size_t, CPoly> reduced;
  auto r = [&](std::size_t k) -> const CPoly& {
    auto it = reduced.find(k);
    if (it == reduced.end()) it = reduced.emplace(k, reduce(gens.p(k))).first;
    return it->second;
  };
  for (const auto& t : generator_tuples(weight, block_degree)) {
    CPoly acc = r(t.front());
    for (std::size_t i = 1; i < t.size(); ++i) {
      acc = acc.var_count() == 2 ? reduced_bracket_adjacent(acc, r(t[i])) : reduced_bracket(acc, r(t[i]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<FamilyMember> bracket_family(std::size_t max_weight, std::size_t max_block_degree,
                                         const GeneratorSet& gens) {
  std::vector<FamilyMember> out;
  std::map<std::vector<std::size_t>, CPoly> memo;
  for (std::size_t b = 1; b <= max_block_degree; ++b) {
    std::vector<std::vector<std::size_t>> tuples;
    for (std::size_t w = 1; w <= max_weight; ++w) {
      for (auto& t : generator_tuples(w, b)) tuples.push_back(std::move(t));
    }
    std::sort(tuples.begin(), tuples.end());
    for (const auto& t : tuples) {
      CPoly poly;
      if (b == 1) {
        poly = gens.p(t.front());
      } else {
        std::vector<std::size_t> head(t.begin(), t.end() - 1);
        poly = ihara_bracket_poly(memo.at(head), gens.p(t.back()));
      }
      memo[t] = poly;
      std::size_t weight = 0;
      for (auto k : t) weight += 2 * k + 1;
      out.push_back({t, weight, std::move(poly)});
    }
  }
  return out;
}

std::string tuple_label(const std::vector<std::size_t>& tuple) {
  if (tuple.empty()) return "";
  std::string acc = "p" + std::to_string(2 * tuple.front() + 1);
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    acc = "{" + acc + ",p" + std::to_string(2 * tuple[i] + 1) + "}";
  }
  return acc;
}

}  // namespace blockmzv
