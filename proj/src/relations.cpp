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

#include "blockmzv/relations.hpp"

#include <map>
#include <mutex>

#include "blockmzv/errors.hpp"
#include "blockmzv/linalg.hpp"

namespace blockmzv {

namespace {

CPoly linear_form(std::size_t vars, const std::vector<std::pair<std::size_t, int>>& parts) {
  CPoly out(vars);
  for (auto [j, c] : parts) {
    Exponents e(vars, 0);
    e[j] = 1;
    out.add_term(e, c);
  }
  return out;
}

// All exponent vectors of length `vars` and total degree `degree`.
void compositions(std::size_t vars, unsigned degree, Exponents& cur, std::size_t pos,
                  std::vector<Exponents>& out) {
  if (pos + 1 == vars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned d = 0; d <= degree; ++d) {
    cur[pos] = d;
    compositions(vars, degree - d, cur, pos + 1, out);
  }
}

struct KernelSpan {
  Matrix rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;
  std::map<Exponents, std::size_t> columns;
};

KernelSpan build_kernel_span(std::size_t n, unsigned d) {
  std::vector<CPoly> gens;
  for (const auto& v : sign_vectors(n)) {
    std::vector<CPoly> ys;
    for (std::size_t j = 1; j < n; ++j) ys.push_back(linear_form(n, {{j, 1}, {0, -v[j]}}));
    std::vector<Exponents> exps;
    Exponents cur(n - 1);
    compositions(n - 1, d, cur, 0, exps);
    for (const auto& e : exps) {
      CPoly m = CPoly::constant(n, 1);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        for (unsigned t = 0; t < e[j]; ++t) m *= ys[j];
      }
      gens.push_back(std::move(m));
    }
  }
  std::vector<Exponents> all;
  Exponents cur(n);
  compositions(n, d, cur, 0, all);
  KernelSpan span;
  for (std::size_t i = 0; i < all.size(); ++i) span.columns[all[i]] = i;
  for (const CPoly& g : gens) {
    Vector row(all.size(), 0);
    for (const auto& [e, c] : g.terms()) row[span.columns.at(e)] = c;
    span.rows.push_back(std::move(row));
  }
  span.pivots = rref(span.rows);
  return span;
}

}  // namespace

CPoly reduce(const CPoly& f) {
  const std::size_t n = f.var_count();
  if (n < 2) throw ArityMismatch("reduce: need at least two variables");
  CPoly g = f;
  for (std::size_t j = 0; j < n; ++j) g = g.divide_by_variable(j);
  return divide_exact(g, linear_form(n, {{0, 1}, {n - 1, -1}}));
}

CPoly unreduce(const CPoly& r) {
  const std::size_t n = r.var_count();
  if (n < 2) throw ArityMismatch("unreduce: need at least two variables");
  CPoly g = r * linear_form(n, {{0, 1}, {n - 1, -1}});
  CPoly out(n);
  for (const auto& [e, c] : g.terms()) {
    Exponents s = e;
    for (auto& x : s) ++x;
    out.add_term(s, c);
  }
  return out;
}

ReducedElement reduce(const BGElement& f) { return {reduce(f.poly), f.weight, f.block_degree}; }

BGElement unreduce(const ReducedElement& r) { return {unreduce(r.poly), r.weight, r.block_degree}; }

CPoly reduced_bracket(const CPoly& r, const CPoly& q) {
  const std::size_t m = r.var_count();
  const std::size_t n = q.var_count();
  if (m < 2 || n < 2) throw ArityMismatch("reduced_bracket: arguments need at least two variables");
  const std::size_t total = m + n - 1;
  CPoly out(total);
  std::vector<Slot> rs(m), qa(n), qb(n);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t t = 0; t < m; ++t) rs[t] = keep((i + t) % total);
    for (std::size_t t = 0; t < n; ++t) {
      qa[t] = keep((i + m + t) % total);
      qb[t] = keep((i + m - 1 + t) % total);
    }
    out += r.substitute(rs, total) * (q.substitute(qa, total) - q.substitute(qb, total));
  }
  return ((m + 1) * (n + 1)) % 2 ? -out : out;
}

ReducedElement reduced_bracket(const ReducedElement& r, const ReducedElement& q) {
  CPoly poly = r.poly.var_count() == 2 ? reduced_bracket_adjacent(r.poly, q.poly)
                                       : reduced_bracket(r.poly, q.poly);
  return {std::move(poly), r.weight + q.weight, r.block_degree + q.block_degree};
}

CPoly reduced_bracket_adjacent(const CPoly& r, const CPoly& q) {
  if (r.var_count() != 2) throw ArityMismatch("reduced_bracket_adjacent: r must have two variables");
  const std::size_t n = q.var_count();
  if (n < 2) throw ArityMismatch("reduced_bracket_adjacent: q needs at least two variables");
  const std::size_t total = n + 1;
  auto dropped = [&](std::size_t skip) {
    std::vector<Slot> s;
    for (std::size_t j = 0; j < total; ++j) {
      if (j != skip) s.push_back(keep(j));
    }
    return q.substitute(s, total);
  };
  CPoly out(total);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t next = (i + 1) % total;
    const Slot rs[] = {keep(i), keep(next)};
    out += r.substitute(rs, total) * (dropped(next) - dropped(i));
  }
  return n % 2 == 0 ? -out : out;
}

std::vector<std::vector<std::size_t>> shuffle_set(std::size_t n, std::size_t r) {
  if (r < 1 || r >= n) throw InvalidInput("shuffle_set: need 1 <= r < n");
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
  // lexicographic order of the chosen position sets
  do {
    std::vector<std::size_t> idx(n);
    std::size_t a = 0, b = r;
    for (std::size_t p = 0; p < n; ++p) idx[p] = pick[p] ? a++ : b++;
    out.push_back(std::move(idx));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

CPoly permute(const CPoly& f, const std::vector<std::size_t>& idx) {
  std::vector<Slot> s(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) s[j] = keep(idx[j]);
  return f.substitute(s, f.var_count());
}

CPoly block_shuffle_sum(const CPoly& f, std::size_t r) {
  CPoly out(f.var_count());
  for (const auto& idx : shuffle_set(f.var_count(), r)) out += permute(f, idx);
  return out;
}

CPoly rotate(const CPoly& f, std::size_t s) {
  const std::size_t n = f.var_count();
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = (j + s) % n;
  return permute(f, idx);
}

CPoly cyclic_sum(const CPoly& f) {
  CPoly out(f.var_count());
  for (std::size_t s = 0; s < f.var_count(); ++s) out += rotate(f, s);
  return out;
}

CPoly reverse_variables(const CPoly& f) {
  const std::size_t n = f.var_count();
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = n - 1 - j;
  return permute(f, idx);
}

std::vector<std::vector<int>> sign_vectors(std::size_t n) {
  if (n == 0) throw InvalidInput("sign_vectors: n must be positive");
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<int> v(n, 1);
    for (std::size_t j = 1; j < n; ++j) {
      if ((mask >> (n - 1 - j)) & 1u) v[j] = -1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

CPoly directional_derivative(const CPoly& f, const std::vector<int>& v) {
  if (v.size() != f.var_count()) throw ArityMismatch("directional_derivative: wrong vector length");
  CPoly out(f.var_count());
  for (std::size_t j = 0; j < v.size(); ++j) {
    CPoly d = f.derivative(j);
    out += v[j] > 0 ? d : -d;
  }
  return out;
}

CPoly block_differential(const CPoly& r) {
  CPoly out = r;
  for (const auto& v : sign_vectors(r.var_count())) {
    out = directional_derivative(out, v);
    if (out.is_zero()) break;
  }
  return out;
}

bool kernel_sum_membership(const CPoly& r) {
  if (r.is_zero()) return true;
  if (!r.is_homogeneous()) throw NotHomogeneous("kernel_sum_membership: input is not homogeneous");
  const std::size_t n = r.var_count();
  const unsigned d = static_cast<unsigned>(r.degree());
  if (n < 2) return false;

  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, KernelSpan> cache;
  const KernelSpan* span = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), build_kernel_span(n, d)).first;
    span = &it->second;
  }
  Vector v(span->columns.size(), 0);
  for (const auto& [e, c] : r.terms()) v[span->columns.at(e)] = c;
  for (std::size_t i = 0; i < span->pivots.size(); ++i) {
    const Rational f = v[span->pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (span->rows[i][j] != 0) v[j] -= f * span->rows[i][j];
    }
  }
  for (const Rational& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace blockmzv
