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

#include "tql/perm/group.hpp"

#include <algorithm>

#include "tql/error.hpp"

namespace tql {

namespace {

bool fixes_all(const Permutation& g, const std::vector<ChainLevel>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g[levels[l].base_point] != levels[l].base_point) return false;
  return true;
}

std::vector<Permutation> drop_identities(std::span<const Permutation> gens, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw UsageError("generator degree mismatch");
    if (!g.is_identity()) out.push_back(g);
  }
  return out;
}

}  // namespace

void StabilizerChain::add_level(Point base_point) {
  ChainLevel lvl;
  lvl.base_point = base_point;
  lvl.orbit_slot.assign(degree_, -1);
  lvl.orbit.push_back(base_point);
  lvl.orbit_slot[base_point] = 0;
  lvl.transversal.emplace_back(degree_);
  lvl.inverse_transversal.emplace_back(degree_);
  levels_.push_back(std::move(lvl));
}

void StabilizerChain::recompute_orbit(std::size_t level) {
  ChainLevel& L = levels_[level];
  // Existing transversal entries stay valid; only new points are appended.
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& s : L.generators) {
      Point q = s[L.orbit[k]];
      if (L.orbit_slot[q] >= 0) continue;
      L.orbit_slot[q] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(q);
      Permutation u = L.transversal[k] * s;
      L.inverse_transversal.push_back(u.inverse());
      L.transversal.push_back(std::move(u));
    }
  }
}

std::size_t StabilizerChain::extend_with(const Permutation& residue, std::size_t first_level,
                                         std::size_t drop) {
  if (drop == levels_.size()) add_level(residue.smallest_moved_point());
  for (std::size_t l = first_level; l <= drop; ++l) {
    levels_[l].generators.push_back(residue);
    recompute_orbit(l);
  }
  return drop;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel& L = levels_[l];
    std::int32_t slot = L.orbit_slot[g[L.base_point]];
    if (slot < 0) return {std::move(g), l};
    g *= L.inverse_transversal[static_cast<std::size_t>(slot)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, drop] = strip(g);
  return drop == levels_.size() && h.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base_point);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& L : levels_)
    for (const auto& s : L.generators)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& L : levels_) n = checked_mul(n, static_cast<std::uint64_t>(L.orbit.size()));
  return n;
}

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> gens) {
  StabilizerChain c;
  c.degree_ = degree;
  std::vector<Permutation> strong = drop_identities(gens, degree);
  for (const auto& g : strong)
    if (fixes_all(g, c.levels_, c.levels_.size())) c.add_level(g.smallest_moved_point());
  for (std::size_t l = 0; l < c.levels_.size(); ++l) {
    for (const auto& g : strong)
      if (fixes_all(g, c.levels_, l)) c.levels_[l].generators.push_back(g);
    c.recompute_orbit(l);
  }

  // Verify Schreier generators level by level from the bottom up; any
  // residue that fails to sift becomes a new strong generator and the check
  // resumes at the deepest level it touched.
  std::size_t i = c.levels_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < c.levels_[lvl].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < c.levels_[lvl].generators.size(); ++s) {
        const ChainLevel& L = c.levels_[lvl];
        const Permutation& gen = L.generators[s];
        const Point img = gen[L.orbit[k]];
        Permutation schreier =
            L.transversal[k] * gen * L.inverse_transversal[static_cast<std::size_t>(L.orbit_slot[img])];
        if (schreier.is_identity()) continue;
        auto [h, drop] = c.strip(std::move(schreier), lvl + 1);
        if (drop < c.levels_.size() || !h.is_identity()) {
          i = c.extend_with(h, lvl + 1, drop) + 1;
          restarted = true;
          break;
        }
      }
    }
    if (!restarted) --i;
  }
  return c;
}

std::optional<StabilizerChain> StabilizerChain::build_to_order(std::size_t degree,
                                                               std::span<const Permutation> gens,
                                                               std::uint64_t target_order,
                                                               std::uint64_t seed) {
  StabilizerChain c;
  c.degree_ = degree;
  std::vector<Permutation> strong = drop_identities(gens, degree);
  for (const auto& g : strong)
    if (fixes_all(g, c.levels_, c.levels_.size())) c.add_level(g.smallest_moved_point());
  for (std::size_t l = 0; l < c.levels_.size(); ++l) {
    for (const auto& g : strong)
      if (fixes_all(g, c.levels_, l)) c.levels_[l].generators.push_back(g);
    c.recompute_orbit(l);
  }
  if (strong.empty()) return target_order == 1 ? std::optional(c) : std::nullopt;

  ProductReplacement walk(strong, seed);
  constexpr int kMaxMisses = 24;
  int misses = 0;
  std::uint64_t current = c.order();
  while (current < target_order) {
    auto [h, drop] = c.strip(walk.next());
    if (drop < c.levels_.size() || !h.is_identity()) {
      c.extend_with(h, 0, drop);
      current = c.order();
      misses = 0;
    } else if (++misses > kMaxMisses) {
      return std::nullopt;
    }
  }
  if (current != target_order) return std::nullopt;
  return c;
}

bool GroupHandle::contains(const Permutation& p) const { return data_->chain.contains(p); }

GroupHandle GroupHandle::with_metadata(GroupMetadata meta) const {
  auto d = std::make_shared<Data>(*data_);
  d->metadata = std::move(meta);
  return GroupHandle(std::move(d));
}

GroupHandle build_group_with_chain(std::size_t degree, std::vector<Permutation> gens,
                                   StabilizerChain chain, GroupMetadata metadata) {
  auto d = std::make_shared<GroupHandle::Data>();
  d->degree = degree;
  d->generators = std::move(gens);
  d->order = chain.order();
  d->chain = std::move(chain);
  if (metadata.known_order && *metadata.known_order != d->order)
    throw DataIntegrityError("group '" + metadata.name + "': computed order " +
                             std::to_string(d->order) + " but declared order " +
                             std::to_string(*metadata.known_order));
  d->metadata = std::move(metadata);
  return GroupHandle(std::move(d));
}

GroupHandle build_group(std::size_t degree, std::vector<Permutation> gens, GroupMetadata metadata) {
  if (degree == 0) throw UsageError("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree) throw UsageError("generator degree mismatch");
  StabilizerChain chain = StabilizerChain::build(degree, gens);
  return build_group_with_chain(degree, std::move(gens), std::move(chain), std::move(metadata));
}

GroupHandle build_group(std::vector<Permutation> gens, GroupMetadata metadata) {
  if (gens.empty()) throw UsageError("empty generator list needs an explicit degree");
  const std::size_t degree = gens.front().degree();
  return build_group(degree, std::move(gens), std::move(metadata));
}

bool contains(const GroupHandle& g, const Permutation& p) { return g.contains(p); }

Permutation random_element(const GroupHandle& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Permutation r(g.degree());
  const auto& levels = g.chain().levels();
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels[l].transversal.size() - 1);
    r *= levels[l].transversal[pick(rng)];
  }
  return r;
}

ProductReplacement::ProductReplacement(std::span<const Permutation> gens, std::uint64_t seed)
    : rng_(seed) {
  if (gens.empty()) return;
  accumulator_ = Permutation(gens.front().degree());
  while (slots_.size() < std::max<std::size_t>(10, gens.size()))
    for (const auto& g : gens) slots_.push_back(g);
  for (int k = 0; k < 50; ++k) next();
}

Permutation ProductReplacement::next() {
  if (slots_.empty()) return accumulator_;
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  while (j == i) j = pick(rng_);
  if (rng_() & 1u)
    slots_[i] *= slots_[j];
  else
    slots_[i] = slots_[j] * slots_[i];
  accumulator_ *= slots_[i];
  return accumulator_;
}

}  // namespace tql
