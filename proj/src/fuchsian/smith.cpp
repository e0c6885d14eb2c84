// Copyright 2026 The tql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tql/fuchsian/smith.hpp"

#include <algorithm>
#include <numeric>

#include "tql/error.hpp"

namespace tql {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// row_a -= k * row_b, with overflow checks.
void row_sub(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] = checked_add(m[a][j], -checked_mul(k, m[b][j]));
}

void col_sub(IntMatrix& m, std::size_t a, std::size_t b, std::int64_t k) {
  for (auto& row : m) row[a] = checked_add(row[a], -checked_mul(k, row[b]));
}

}  // namespace

std::vector<std::int64_t> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs64(m[i][j]) < abs64(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        std::vector<std::int64_t> d(n, 0);
        for (std::size_t k = 0; k < t; ++k) d[k] = abs64(m[k][k]);
        return d;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_sub(m, i, t, m[i][t] / m[t][t]);
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        col_sub(m, j, t, m[t][j] / m[t][t]);
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block; if some entry
      // resists, fold its row into the pivot row and go again.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_sub(m, t, bad, -1);
    }
  }
  std::vector<std::int64_t> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = abs64(m[k][k]);
  return d;
}

IntMatrix relation_matrix(const Signature& s) {
  const std::size_t r = s.periods.size();
  IntMatrix m(r + 1, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    m[i][i] = s.periods[i];
    m[r][i] = 1;
  }
  return m;
}

Abelianization abelianization(const Signature& s) {
  Abelianization a;
  a.free_rank = 2 * s.genus;
  if (s.periods.empty()) return a;
  for (auto d : smith_invariants(relation_matrix(s))) {
    if (d == 0) {
      ++a.free_rank;
    } else if (d > 1) {
      a.torsion.push_back(d);
    }
  }
  return a;
}

std::string Abelianization::to_string() const {
  if (is_trivial()) return "trivial";
  std::string out;
  for (auto d : torsion) out += (out.empty() ? "" : " x ") + ("Z" + std::to_string(d));
  if (free_rank > 0)
    out += (out.empty() ? "" : " x ") + (free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank));
  return out;
}

std::int64_t determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 det = sign * a[n - 1][n - 1];
  if (det > INT64_MAX || det < -INT64_MAX) throw OverflowError("determinant out of range");
  return static_cast<std::int64_t>(det);
}

std::int64_t maximal_minor_gcd(const IntMatrix& m) {
  if (m.empty() || m.size() != m[0].size() + 1) throw UsageError("expected one more row than columns");
  std::int64_t g = 0;
  for (std::size_t skip = 0; skip < m.size(); ++skip) {
    IntMatrix minor;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != skip) minor.push_back(m[i]);
    g = std::gcd(g, abs64(determinant(minor)));
  }
  return g;
}

}  // namespace tql
