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

// Brute-force reference computations used as independent test oracles.
// Nothing here touches stabilizer chains.

#ifndef TQL_TESTS_ORACLE_HPP
#define TQL_TESTS_ORACLE_HPP

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "tql/perm/permutation.hpp"

namespace tql::oracle {

/// All elements of <gens> by closure under right multiplication.
inline std::vector<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      Permutation c = queue[i] * s;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return queue;
}

inline std::uint64_t order_by_cycles(const Permutation& p) {
  // Repeated multiplication, independent of the lcm formula.
  Permutation q = p;
  std::uint64_t n = 1;
  while (!q.is_identity()) {
    q = q * p;
    ++n;
  }
  return n;
}

inline std::size_t count_of_order(const std::vector<Permutation>& elts, std::uint64_t k) {
  std::size_t n = 0;
  for (const auto& e : elts) n += order_by_cycles(e) == k;
  return n;
}

/// Conjugacy class sizes by brute force over all elements.
inline std::vector<std::size_t> class_sizes(const std::vector<Permutation>& elts,
                                            const std::vector<Permutation>& subset) {
  std::set<Permutation> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : subset) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& g : elts) cls.insert(g.inverse() * x * g);
    for (const auto& c : cls) done.insert(c);
    sizes.push_back(cls.size());
  }
  return sizes;
}

/// Derived subgroup as the closure of all commutators of all element pairs.
inline std::size_t derived_order(std::size_t degree, const std::vector<Permutation>& elts) {
  std::set<Permutation> comms;
  for (const auto& a : elts)
    for (const auto& b : elts) comms.insert(a.inverse() * b.inverse() * a * b);
  return closure(degree, std::vector<Permutation>(comms.begin(), comms.end())).size();
}

}  // namespace tql::oracle

#endif  // TQL_TESTS_ORACLE_HPP
