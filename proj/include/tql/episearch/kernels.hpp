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

// Search loops behind find_triples / find_quadruples. Each has a plain
// serial version written against Permutation, kept as the reference, and
// an OpenMP version over flat image arrays. Results must agree exactly.

#ifndef TQL_EPISEARCH_KERNELS_HPP
#define TQL_EPISEARCH_KERNELS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "tql/perm/group.hpp"

namespace tql {

/// Exact generation test against a fixed group, safe to call concurrently.
class GenerationTester {
 public:
  explicit GenerationTester(const GroupHandle& g);
  bool operator()(std::span<const Permutation> gens, std::uint64_t seed) const;

 private:
  GroupHandle g_;
  std::vector<std::uint32_t> orbit_ids_;
};

/// Permutations stored back to back for cache-friendly inner loops.
class ElementTable {
 public:
  ElementTable(std::size_t degree, std::span<const Permutation> elements);
  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  const Point* operator[](std::size_t i) const { return data_.data() + i * degree_; }

 private:
  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<Point> data_;
};

struct TripleScan {
  std::uint64_t total = 0;
  /// Smallest (outer, inner) hit.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;
};

/// Hits are (i, j) with |outer[i] * inner[j]| == k and the pair generating
/// G; total sums weight[i] over hits.
TripleScan scan_triples_serial(const GenerationTester& gen, std::span<const Permutation> outer,
                               std::span<const std::uint64_t> weight, std::span<const Permutation> inner,
                               std::uint64_t k, std::uint64_t seed, bool collect);
TripleScan scan_triples_parallel(const GenerationTester& gen, std::span<const Permutation> outer,
                                 std::span<const std::uint64_t> weight, std::span<const Permutation> inner,
                                 std::uint64_t k, std::uint64_t seed, bool collect, int threads);

using QuadPosition = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

struct QuadrupleScan {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::map<std::uint64_t, QuadPosition> first;
};

/// Hits are (i, a, b): x1 = reps[i], x2 = involutions[a], x3 =
/// involutions[b], with x1 x2 x3 of order exactly 3, n = |x1 x2| allowed by
/// the filter, and the three generating G.
QuadrupleScan scan_quadruples_serial(const GenerationTester& gen, std::span<const Permutation> reps,
                                     std::span<const std::uint64_t> weight,
                                     std::span<const Permutation> involutions,
                                     const std::optional<std::set<std::uint64_t>>& n_filter, std::uint64_t seed);
QuadrupleScan scan_quadruples_parallel(const GenerationTester& gen, std::span<const Permutation> reps,
                                       std::span<const std::uint64_t> weight,
                                       std::span<const Permutation> involutions,
                                       const std::optional<std::set<std::uint64_t>>& n_filter, std::uint64_t seed,
                                       int threads);

/// Seed for the generation test at a given search position.
std::uint64_t position_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

}  // namespace tql

#endif  // TQL_EPISEARCH_KERNELS_HPP
