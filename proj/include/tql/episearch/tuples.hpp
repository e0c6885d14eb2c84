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

#ifndef TQL_EPISEARCH_TUPLES_HPP
#define TQL_EPISEARCH_TUPLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tql/perm/enumerate.hpp"
#include "tql/perm/group.hpp"

namespace tql {

/// x y z = 1 with |x|, |y|, |z| exactly the requested type.
struct GeneratingTriple {
  Permutation x, y, z;
};

/// x1 x2 x3 x4 = 1 with |x1| = |x2| = |x3| = 2, |x4| = 3; n = |x1 x2|.
struct GeneratingQuadruple {
  Permutation x1, x2, x3, x4;
  std::uint64_t n = 0;
};

using TripleType = std::array<std::uint64_t, 3>;
inline constexpr TripleType kHurwitzType{2, 3, 7};

/// Which implementation runs the search loops. Both give identical reports.
enum class Kernel { kSerial, kParallel };

struct SearchOptions {
  Kernel kernel = Kernel::kParallel;
  /// OpenMP threads for the parallel kernel; 0 keeps the runtime default.
  int threads = 0;
  /// Seeds the randomized fast path of the generation test. Verdicts are
  /// exact and do not depend on it.
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Quadruple searches refuse groups with more involutions than this
  /// unless an n filter is given.
  std::uint64_t involution_cap = 20000;
  /// Keep every (outer representative, inner element) hit in the report.
  bool collect_hits = false;
};

struct TripleReport {
  TripleType type{};
  std::uint64_t group_order = 0;
  /// Ordered generating triples (x, y, z).
  std::uint64_t total = 0;
  std::optional<std::uint64_t> aut_order;
  /// total / aut_order, when aut_order is known.
  std::optional<std::uint64_t> class_count;
  /// Orbits under conjugation by G, i.e. total / |G/Z(G)|.
  std::uint64_t inner_class_count = 0;
  std::optional<GeneratingTriple> witness;

  /// Representatives x of the classes of elements of order type[0], and
  /// all elements y of order type[1], as searched.
  std::vector<ConjugacyClass> outer_classes;
  std::vector<Permutation> inner_elements;
  /// (index into outer_classes, index into inner_elements) per hit, sorted;
  /// filled only with SearchOptions::collect_hits.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;
};

struct QuadrupleReport {
  std::uint64_t group_order = 0;
  std::uint64_t involution_count = 0;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> aut_order;
  std::optional<std::uint64_t> class_count;
  std::uint64_t inner_class_count = 0;
  /// n -> ordered quadruple count.
  std::map<std::uint64_t, std::uint64_t> n_distribution;
  /// One canonical quadruple per observed n (smallest search position).
  std::map<std::uint64_t, GeneratingQuadruple> witnesses;
  std::optional<std::set<std::uint64_t>> n_filter;

  std::set<std::uint64_t> n_set() const;
};

std::optional<GeneratingTriple> make_triple(const Permutation& x, const Permutation& y);

/// Re-validates from scratch: exact orders, product relation, generation
/// (deterministic Schreier-Sims).
bool validate_triple(const GroupHandle& g, const GeneratingTriple& t, TripleType type = kHurwitzType);
bool validate_quadruple(const GroupHandle& g, const GeneratingQuadruple& q);

/// Counts ordered generating triples of the given type. The outer element
/// runs over class representatives (weighted by class size), the inner
/// over all elements of its order.
TripleReport find_triples(const GroupHandle& g, TripleType type = kHurwitzType, const SearchOptions& opt = {});

/// Counts ordered generating (2,2,2,3) quadruples, optionally only those
/// with n in `n_filter` (pruned before the generation test).
QuadrupleReport find_quadruples(const GroupHandle& g, std::optional<std::set<std::uint64_t>> n_filter = {},
                                const SearchOptions& opt = {});

/// |Z(G)|, by enumeration.
std::uint64_t center_order(const GroupHandle& g, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace tql

#endif  // TQL_EPISEARCH_TUPLES_HPP
