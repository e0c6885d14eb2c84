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

#ifndef TQL_EPISEARCH_BRAID_HPP
#define TQL_EPISEARCH_BRAID_HPP

#include <cstdint>
#include <vector>

#include "tql/episearch/tuples.hpp"

namespace tql {

/// Every ordered generating (2,2,2,3) quadruple of G, in search order.
/// Throws CapExceeded when the cube of the involution count exceeds the
/// work cap.
std::vector<GeneratingQuadruple> all_quadruples(const GroupHandle& g, std::uint64_t work_cap = 50'000'000,
                                                const SearchOptions& opt = {});

struct BraidClassReport {
  std::uint64_t quadruples = 0;
  /// Orbit sizes, largest first.
  std::vector<std::uint64_t> orbit_sizes;
  std::uint64_t orbit_count() const { return orbit_sizes.size(); }
};

/// Orbits of the quadruples under conjugation by G and the moves that keep
/// the period order (2,2,2,3): sigma_1, sigma_2 and sigma_3 squared, where
/// sigma_i replaces (a, b) in slots i, i+1 by (a b a^-1, a). The moves
/// preserve the product and the generated group, so these orbits are the
/// surjections up to inner automorphisms and changes of canonical
/// generators.
BraidClassReport quadruple_braid_classes(const GroupHandle& g, std::uint64_t work_cap = 50'000'000,
                                         const SearchOptions& opt = {});

}  // namespace tql

#endif  // TQL_EPISEARCH_BRAID_HPP
