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

#ifndef TQL_EPISEARCH_SUBGROUPS_HPP
#define TQL_EPISEARCH_SUBGROUPS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tql/episearch/tuples.hpp"
#include "tql/fuchsian/signature.hpp"

namespace tql {

struct SubgroupSearchOptions {
  std::uint64_t attempts = 64;
  /// Random elements drawn per attempt.
  std::uint64_t draws = 48;
  std::uint64_t seed = 0;
  /// Elementwise fingerprints are computed up to this subgroup order.
  std::uint64_t census_cap = 200'000;
};

/// Semi-decision search for subgroups of order m. Each attempt grows
/// <x_1, ..., x_k> from random elements, keeping a new element only when
/// the order stays a divisor of m and strictly grows. Results are
/// deduplicated by a conjugation-invariant fingerprint (orbit lengths and
/// the cycle-type census), so the list may miss classes but never repeats
/// one. Deterministic for a fixed seed. Throws UsageError unless m | |G|.
std::vector<GroupHandle> find_subgroups_of_order(const GroupHandle& g, std::uint64_t m,
                                                 const SubgroupSearchOptions& opt = {});

/// Signature of the preimage of U under the surjection (2,3,7) -> G given
/// by the triple, from the coset action.
Signature preimage_signature(const GroupHandle& g, const GeneratingTriple& triple, const GroupHandle& u);

struct SubgroupSignature {
  GroupHandle subgroup;
  std::int64_t index = 0;
  Signature signature;
  /// Genus 0 with exactly three periods.
  bool irreducible = false;
};

/// Subgroups at the indices where a (2,3,7) subgroup can again be a
/// triangle group (8, 9, 16, 24), with their preimage signatures. An empty
/// irreducible set is the reducible verdict.
std::vector<SubgroupSignature> irreducible_subgroups(const GroupHandle& h, const GeneratingTriple& triple,
                                                     const SubgroupSearchOptions& opt = {});

struct Theorem1Report {
  bool hypothesis_met = false;
  std::uint64_t subgroup_order = 0;
  std::uint64_t subgroups_examined = 0;
  std::optional<GroupHandle> subgroup;
  std::optional<Signature> signature;
  std::uint64_t image_order = 0;
  bool image_perfect = false;
  /// Image of order 168 and perfect, preimage signature (0;2,2,2,3).
  bool confirmed() const;
};

/// Coset action of H on an index-7 subgroup U: the image must be perfect
/// of order 168 and U's preimage signature (0;2,2,2,3).
Theorem1Report theorem1_check(const GroupHandle& h, const GeneratingTriple& triple, const GroupHandle& u);

/// Same, searching for U of order |H|/7 first. hypothesis_met is false
/// when no subgroup of that order with signature (0;2,2,2,3) is found.
Theorem1Report theorem1_check(const GroupHandle& h, const GeneratingTriple& triple,
                              const SubgroupSearchOptions& opt = {});

}  // namespace tql

#endif  // TQL_EPISEARCH_SUBGROUPS_HPP
