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

#include "blockmzv/linalg.hpp"

#include <map>

#include "blockmzv/errors.hpp"

namespace blockmzv {

namespace {

std::vector<std::vector<Integer>> integer_rows(const Matrix& rows) {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows.size());
  for (const Vector& r : rows) {
    Integer l = 1;
    for (const Rational& v : r) {
      if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Integer> ir(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
      ir[j] = r[j].get_num() * (l / r[j].get_den());
    }
    out.push_back(std::move(ir));
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const Vector& r : rows) {
    if (r.size() != cols) throw ArityMismatch("rank: ragged matrix");
  }
  auto a = integer_rows(rows);
  const std::size_t m = a.size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref(Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  const std::size_t m = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vector> nullspace(const Matrix& a, std::size_t cols) {
  Matrix work = a;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols) {
  if (a.size() != b.size()) throw ArityMismatch("solve: right-hand side has wrong length");
  Matrix work;
  work.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector row = a[i];
    row.push_back(b[i]);
    work.push_back(std::move(row));
  }
  auto pivots = rref(work);
  Vector x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = work[i][cols];
  }
  return x;
}

Matrix coefficient_matrix(const std::vector<CPoly>& polys, std::vector<Exponents>* monomials) {
  std::map<Exponents, std::size_t> index;
  for (const CPoly& p : polys) {
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, i] : index) i = k++;
  Matrix m(polys.size(), Vector(index.size(), 0));
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [e, c] : polys[r].terms()) m[r][index[e]] = c;
  }
  if (monomials) {
    monomials->clear();
    for (const auto& [e, i] : index) monomials->push_back(e);
  }
  return m;
}

std::size_t rank_over_q(const std::vector<CPoly>& polys) {
  if (polys.empty()) return 0;
  int degree = -1;
  for (const CPoly& p : polys) {
    if (p.var_count() != polys.front().var_count()) {
      throw ArityMismatch("rank_over_q: inputs have different variable counts");
    }
    if (!p.is_homogeneous()) throw NotHomogeneous("rank_over_q: input is not homogeneous");
    int d = p.degree();
    if (d < 0) continue;
    if (degree >= 0 && d != degree) throw NotHomogeneous("rank_over_q: inputs have different degrees");
    degree = d;
  }
  return rank(coefficient_matrix(polys));
}

}  // namespace blockmzv
