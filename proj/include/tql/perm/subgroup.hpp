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

#ifndef TQL_PERM_SUBGROUP_HPP
#define TQL_PERM_SUBGROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tql/perm/group.hpp"

namespace tql {

/// Orbit partition of the points under `gens`: orbit_id[p] numbers orbits
/// in order of their smallest point.
std::vector<std::uint32_t> orbit_ids(std::size_t degree, std::span<const Permutation> gens);
std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> gens);
bool is_transitive(std::size_t degree, std::span<const Permutation> gens);

/// Subgroup of G generated by `gens`; throws UsageError if a generator is
/// not in G.
GroupHandle subgroup(const GroupHandle& g, std::vector<Permutation> gens, GroupMetadata meta = {});

/// True iff `gens` generate all of G (assumed to lie in G). Rejects early
/// on orbit mismatch; otherwise a seeded random chain that reaches |G| is a
/// proof, and a stalled one falls back to the deterministic build.
bool generates(const GroupHandle& g, std::span<const Permutation> gens, std::uint64_t seed = 0);

/// Order of <gens> by deterministic Schreier-Sims.
std::uint64_t generated_order(std::size_t degree, std::span<const Permutation> gens);

/// Smallest normal subgroup of G containing `gens`.
GroupHandle normal_closure(const GroupHandle& g, std::vector<Permutation> gens);

/// [G, G], as the normal closure of the generator commutators.
GroupHandle derived_subgroup(const GroupHandle& g);
bool is_perfect(const GroupHandle& g);

/// Action of G by right multiplication on the right cosets U r of U.
class CosetAction {
 public:
  std::size_t degree() const { return reps_.size(); }
  const GroupHandle& image() const { return image_; }
  /// reps()[0] is the identity; coset i is U * reps()[i].
  const std::vector<Permutation>& representatives() const { return reps_; }
  /// Images of G's generators, in order.
  const std::vector<Permutation>& generator_images() const { return generator_images_; }

  /// Index of the coset containing g.
  std::size_t coset_of(const Permutation& g) const;
  /// The permutation of the cosets induced by g in G.
  Permutation image_of(const Permutation& g) const;

 private:
  friend CosetAction coset_action(const GroupHandle& g, const GroupHandle& u);
  GroupHandle u_;
  std::vector<Permutation> reps_;
  std::vector<Point> key_orbit_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::uint64_t> bucket_keys_;
  std::vector<Permutation> generator_images_;
  GroupHandle image_;

  std::uint64_t key_of(const Permutation& g) const;
  std::optional<std::size_t> find_coset(const Permutation& g) const;
};

/// Throws UsageError when U is not a subgroup of G.
CosetAction coset_action(const GroupHandle& g, const GroupHandle& u);

/// |core_G(U)| counted directly as the elements of U acting trivially on
/// the cosets; nullopt when U is too large to enumerate.
std::optional<std::uint64_t> core_order(const CosetAction& action, const GroupHandle& u,
                                        std::uint64_t cap = 2'000'000);

}  // namespace tql

#endif  // TQL_PERM_SUBGROUP_HPP
