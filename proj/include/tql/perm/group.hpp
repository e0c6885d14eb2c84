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

#ifndef TQL_PERM_GROUP_HPP
#define TQL_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tql/perm/permutation.hpp"

namespace tql {

struct GroupMetadata {
  std::optional<std::uint64_t> known_order;
  std::optional<std::uint64_t> aut_order;
  std::string name;
  /// Set by constructors that know the group is simple (PSL2(q), A_n, ...).
  bool declared_simple = false;
};

/// One level of a stabilizer chain: the group fixing all earlier base
/// points, its orbit of `base_point`, and an explicit transversal.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// orbit_slot[p] is the index of p in `orbit`, or -1.
  std::vector<std::int32_t> orbit_slot;
  /// transversal[k] maps base_point to orbit[k]; inverse_transversal[k] undoes it.
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;

  bool in_orbit(Point p) const { return orbit_slot[p] >= 0; }
};

/// Base and strong generating set with explicit transversals.
class StabilizerChain {
 public:
  StabilizerChain() = default;

  /// Deterministic Schreier-Sims. New base points are always the smallest
  /// point moved by the generator or residue that needs them.
  static StabilizerChain build(std::size_t degree, std::span<const Permutation> gens);

  /// Randomized Schreier-Sims that stops as soon as the chain certifies
  /// `target_order` (the chain order is always a lower bound for the true
  /// subgroup order). Returns nullopt when it stalls before reaching it.
  static std::optional<StabilizerChain> build_to_order(std::size_t degree,
                                                       std::span<const Permutation> gens,
                                                       std::uint64_t target_order,
                                                       std::uint64_t seed);

  std::size_t degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  std::uint64_t order() const;

  /// Sifts g starting at level `from`. Returns the residue and the level it
  /// dropped out at (levels().size() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;

 private:
  void add_level(Point base_point);
  void recompute_orbit(std::size_t level);
  std::size_t extend_with(const Permutation& residue, std::size_t first_level, std::size_t drop);

  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
};

/// Immutable finite permutation group with its stabilizer chain. Copies are
/// cheap and share state; handles are safe to read from many threads.
class GroupHandle {
 public:
  GroupHandle() = default;

  std::size_t degree() const { return data_->degree; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  const StabilizerChain& chain() const { return data_->chain; }
  std::uint64_t order() const { return data_->order; }
  const GroupMetadata& metadata() const { return data_->metadata; }
  const std::string& name() const { return data_->metadata.name; }
  std::vector<Point> base() const { return data_->chain.base(); }

  bool contains(const Permutation& p) const;
  bool is_trivial() const { return order() == 1; }

  /// Same group and chain with different metadata.
  GroupHandle with_metadata(GroupMetadata meta) const;

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    StabilizerChain chain;
    std::uint64_t order = 1;
    GroupMetadata metadata;
  };
  explicit GroupHandle(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;

  friend GroupHandle build_group(std::size_t degree, std::vector<Permutation> gens,
                                 GroupMetadata metadata);
  friend GroupHandle build_group_with_chain(std::size_t degree, std::vector<Permutation> gens,
                                            StabilizerChain chain, GroupMetadata metadata);
};

/// Builds the group generated by `gens` (identity generators are dropped; an
/// empty list gives the trivial group). Throws DataIntegrityError when
/// metadata.known_order disagrees with the computed order.
GroupHandle build_group(std::size_t degree, std::vector<Permutation> gens,
                        GroupMetadata metadata = {});

/// Convenience overload; the degree is taken from the generators.
GroupHandle build_group(std::vector<Permutation> gens, GroupMetadata metadata = {});

/// Wraps a chain that is already known to be complete for `gens`.
GroupHandle build_group_with_chain(std::size_t degree, std::vector<Permutation> gens,
                                   StabilizerChain chain, GroupMetadata metadata = {});

bool contains(const GroupHandle& g, const Permutation& p);

/// Uniformly distributed element, drawn as a product of random transversal
/// elements. Deterministic in `seed`.
Permutation random_element(const GroupHandle& g, std::uint64_t seed);

/// Product-replacement random walk over a generating set. Used where no
/// stabilizer chain exists yet.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::uint64_t seed);
  Permutation next();

 private:
  std::vector<Permutation> slots_;
  Permutation accumulator_;
  std::mt19937_64 rng_;
};

}  // namespace tql

#endif  // TQL_PERM_GROUP_HPP
