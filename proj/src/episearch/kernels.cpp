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

#include "tql/episearch/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "tql/perm/subgroup.hpp"

namespace tql {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Per-thread scratch for cycle walks: a stamp per point avoids clearing.
struct Scratch {
  std::vector<Point> prod;
  std::vector<std::uint32_t> mark;
  std::uint32_t stamp = 0;

  explicit Scratch(std::size_t n) : prod(n), mark(n, 0) {}

  std::uint32_t next_stamp() {
    if (++stamp == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      stamp = 1;
    }
    return stamp;
  }
};

void compose_into(const Point* a, const Point* b, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

/// Order of p, or 0 as soon as a cycle length fails to divide `bound`
/// (pass 0 to disable the early exit).
std::uint64_t order_of(const Point* p, std::size_t n, Scratch& s, std::uint64_t bound) {
  const std::uint32_t st = s.next_stamp();
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.mark[i] == st) continue;
    std::uint64_t len = 0;
    for (Point j = static_cast<Point>(i); s.mark[j] != st; j = p[j]) {
      s.mark[j] = st;
      ++len;
    }
    if (bound != 0 && bound % len != 0) return 0;
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// |x3 after p| == 3 exactly, with w(i) = x3[p[i]].
bool product_has_order_three(const Point* p, const Point* x3, std::size_t n) {
  bool moved = false;
  for (std::size_t i = 0; i < n; ++i) {
    Point a = x3[p[i]];
    Point b = x3[p[a]];
    Point c = x3[p[b]];
    if (c != i) return false;
    moved = moved || a != i;
  }
  return moved;
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

std::uint64_t position_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix(seed ^ splitmix(a ^ splitmix(b ^ splitmix(c))));
}

GenerationTester::GenerationTester(const GroupHandle& g)
    : g_(g), orbit_ids_(orbit_ids(g.degree(), g.generators())) {}

bool GenerationTester::operator()(std::span<const Permutation> gens, std::uint64_t seed) const {
  if (g_.is_trivial()) return true;
  if (orbit_ids(g_.degree(), gens) != orbit_ids_) return false;
  if (StabilizerChain::build_to_order(g_.degree(), gens, g_.order(), seed)) return true;
  return generated_order(g_.degree(), gens) == g_.order();
}

ElementTable::ElementTable(std::size_t degree, std::span<const Permutation> elements)
    : degree_(degree), size_(elements.size()), data_(degree * elements.size()) {
  for (std::size_t i = 0; i < size_; ++i) std::copy_n(elements[i].data(), degree, data_.data() + i * degree);
}

TripleScan scan_triples_serial(const GenerationTester& gen, std::span<const Permutation> outer,
                               std::span<const std::uint64_t> weight, std::span<const Permutation> inner,
                               std::uint64_t k, std::uint64_t seed, bool collect) {
  TripleScan out;
  for (std::uint32_t i = 0; i < outer.size(); ++i) {
    for (std::uint32_t j = 0; j < inner.size(); ++j) {
      if (element_order(outer[i] * inner[j]) != k) continue;
      std::array<Permutation, 2> pair{outer[i], inner[j]};
      if (!gen(pair, position_seed(seed, i, j))) continue;
      out.total += weight[i];
      if (!out.first) out.first = {i, j};
      if (collect) out.hits.emplace_back(i, j);
    }
  }
  return out;
}

TripleScan scan_triples_parallel(const GenerationTester& gen, std::span<const Permutation> outer,
                                 std::span<const std::uint64_t> weight, std::span<const Permutation> inner,
                                 std::uint64_t k, std::uint64_t seed, bool collect, int threads) {
  TripleScan out;
  if (outer.empty() || inner.empty()) return out;
  const std::size_t n = outer.front().degree();
  ElementTable xs(n, outer), ys(n, inner);
  const std::uint64_t cells = static_cast<std::uint64_t>(xs.size()) * ys.size();
  const int nt = resolve_threads(threads);
  std::vector<TripleScan> local(static_cast<std::size_t>(nt));

#pragma omp parallel num_threads(nt)
  {
    TripleScan& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
    Scratch s(n);
#pragma omp for schedule(dynamic, 256)
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
      const auto i = static_cast<std::uint32_t>(cell / ys.size());
      const auto j = static_cast<std::uint32_t>(cell % ys.size());
      compose_into(xs[i], ys[j], s.prod.data(), n);
      if (order_of(s.prod.data(), n, s, k) != k) continue;
      std::array<Permutation, 2> pair{outer[i], inner[j]};
      if (!gen(pair, position_seed(seed, i, j))) continue;
      mine.total += weight[i];
      if (!mine.first || std::pair{i, j} < *mine.first) mine.first = {i, j};
      if (collect) mine.hits.emplace_back(i, j);
    }
  }

  for (auto& m : local) {
    out.total += m.total;
    if (m.first && (!out.first || *m.first < *out.first)) out.first = m.first;
    out.hits.insert(out.hits.end(), m.hits.begin(), m.hits.end());
  }
  std::sort(out.hits.begin(), out.hits.end());
  return out;
}

QuadrupleScan scan_quadruples_serial(const GenerationTester& gen, std::span<const Permutation> reps,
                                     std::span<const std::uint64_t> weight,
                                     std::span<const Permutation> involutions,
                                     const std::optional<std::set<std::uint64_t>>& n_filter, std::uint64_t seed) {
  QuadrupleScan out;
  for (std::uint32_t i = 0; i < reps.size(); ++i) {
    for (std::uint32_t a = 0; a < involutions.size(); ++a) {
      Permutation p = reps[i] * involutions[a];
      const std::uint64_t n = element_order(p);
      if (n_filter && !n_filter->count(n)) continue;
      for (std::uint32_t b = 0; b < involutions.size(); ++b) {
        if (element_order(p * involutions[b]) != 3) continue;
        std::array<Permutation, 3> gens{reps[i], involutions[a], involutions[b]};
        if (!gen(gens, position_seed(seed, i, a, b))) continue;
        out.counts[n] += weight[i];
        out.first.try_emplace(n, QuadPosition{i, a, b});
      }
    }
  }
  return out;
}

QuadrupleScan scan_quadruples_parallel(const GenerationTester& gen, std::span<const Permutation> reps,
                                       std::span<const std::uint64_t> weight,
                                       std::span<const Permutation> involutions,
                                       const std::optional<std::set<std::uint64_t>>& n_filter, std::uint64_t seed,
                                       int threads) {
  QuadrupleScan out;
  if (reps.empty() || involutions.empty()) return out;
  const std::size_t n = reps.front().degree();
  ElementTable xs(n, reps), invs(n, involutions);
  const std::uint64_t rows = static_cast<std::uint64_t>(xs.size()) * invs.size();
  const int nt = resolve_threads(threads);
  std::vector<QuadrupleScan> local(static_cast<std::size_t>(nt));

#pragma omp parallel num_threads(nt)
  {
    QuadrupleScan& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
    Scratch s(n);
#pragma omp for schedule(dynamic, 4)
    for (std::uint64_t row = 0; row < rows; ++row) {
      const auto i = static_cast<std::uint32_t>(row / invs.size());
      const auto a = static_cast<std::uint32_t>(row % invs.size());
      compose_into(xs[i], invs[a], s.prod.data(), n);
      const std::uint64_t nval = order_of(s.prod.data(), n, s, 0);
      if (n_filter && !n_filter->count(nval)) continue;
      for (std::uint32_t b = 0; b < invs.size(); ++b) {
        if (!product_has_order_three(s.prod.data(), invs[b], n)) continue;
        std::array<Permutation, 3> gens{reps[i], involutions[a], involutions[b]};
        if (!gen(gens, position_seed(seed, i, a, b))) continue;
        mine.counts[nval] += weight[i];
        auto [it, fresh] = mine.first.try_emplace(nval, QuadPosition{i, a, b});
        if (!fresh && QuadPosition{i, a, b} < it->second) it->second = {i, a, b};
      }
    }
  }

  for (auto& m : local) {
    for (auto [nv, c] : m.counts) out.counts[nv] += c;
    for (auto [nv, pos] : m.first) {
      auto [it, fresh] = out.first.try_emplace(nv, pos);
      if (!fresh && pos < it->second) it->second = pos;
    }
  }
  return out;
}

}  // namespace tql
