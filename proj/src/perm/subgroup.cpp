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

#include "tql/perm/subgroup.hpp"

#include <algorithm>
#include <limits>

#include "tql/error.hpp"
#include "tql/perm/enumerate.hpp"

namespace tql {

std::vector<std::uint32_t> orbit_ids(std::size_t degree, std::span<const Permutation> gens) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> id(degree, kUnset);
  std::uint32_t next = 0;
  std::vector<Point> stack;
  for (Point s = 0; s < degree; ++s) {
    if (id[s] != kUnset) continue;
    id[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        Point q = g[p];
        if (id[q] == kUnset) {
          id[q] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> gens) {
  auto id = orbit_ids(degree, gens);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < degree; ++p) {
    if (id[p] >= out.size()) out.resize(id[p] + 1);
    out[id[p]].push_back(p);
  }
  return out;
}

bool is_transitive(std::size_t degree, std::span<const Permutation> gens) {
  auto id = orbit_ids(degree, gens);
  return std::all_of(id.begin(), id.end(), [](std::uint32_t v) { return v == 0; });
}

GroupHandle subgroup(const GroupHandle& g, std::vector<Permutation> gens, GroupMetadata meta) {
  for (const auto& s : gens)
    if (!g.contains(s)) throw UsageError("subgroup generator is not an element of the group");
  return build_group(g.degree(), std::move(gens), std::move(meta));
}

std::uint64_t generated_order(std::size_t degree, std::span<const Permutation> gens) {
  return StabilizerChain::build(degree, gens).order();
}

bool generates(const GroupHandle& g, std::span<const Permutation> gens, std::uint64_t seed) {
  if (g.is_trivial()) return true;
  if (orbit_ids(g.degree(), gens) != orbit_ids(g.degree(), g.generators())) return false;
  if (StabilizerChain::build_to_order(g.degree(), gens, g.order(), seed)) return true;
  return generated_order(g.degree(), gens) == g.order();
}

GroupHandle normal_closure(const GroupHandle& g, std::vector<Permutation> gens) {
  std::vector<Permutation> current;
  for (auto& s : gens)
    if (!s.is_identity()) current.push_back(std::move(s));
  StabilizerChain chain = StabilizerChain::build(g.degree(), current);
  for (std::size_t i = 0; i < current.size(); ++i) {
    for (const auto& h : g.generators()) {
      Permutation c = current[i].conjugate_by(h);
      if (chain.contains(c)) continue;
      current.push_back(std::move(c));
      chain = StabilizerChain::build(g.degree(), current);
    }
  }
  return build_group_with_chain(g.degree(), std::move(current), std::move(chain));
}

GroupHandle derived_subgroup(const GroupHandle& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, std::move(comms));
}

bool is_perfect(const GroupHandle& g) { return derived_subgroup(g).order() == g.order(); }

std::uint64_t CosetAction::key_of(const Permutation& g) const {
  // U * g maps the U-invariant set key_orbit_ onto the same set for every
  // member of the coset, so the image set is a coset invariant.
  std::vector<Point> img;
  img.reserve(key_orbit_.size());
  for (Point p : key_orbit_) img.push_back(g[p]);
  std::sort(img.begin(), img.end());
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : img) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::size_t> CosetAction::find_coset(const Permutation& g) const {
  const std::uint64_t key = key_of(g);
  auto it = std::lower_bound(bucket_keys_.begin(), bucket_keys_.end(), key);
  if (it == bucket_keys_.end() || *it != key) return std::nullopt;
  for (std::size_t j : buckets_[static_cast<std::size_t>(it - bucket_keys_.begin())])
    if (u_.contains(g * reps_[j].inverse())) return j;
  return std::nullopt;
}

std::size_t CosetAction::coset_of(const Permutation& g) const {
  auto j = find_coset(g);
  if (!j) throw UsageError("element does not lie in the group acting on these cosets");
  return *j;
}

Permutation CosetAction::image_of(const Permutation& g) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(coset_of(reps_[i] * g));
  return Permutation(std::move(img));
}

CosetAction coset_action(const GroupHandle& g, const GroupHandle& u) {
  if (u.degree() != g.degree()) throw UsageError("subgroup degree mismatch");
  for (const auto& s : u.generators())
    if (!g.contains(s)) throw UsageError("U is not a subgroup of G");
  if (g.order() % u.order() != 0) throw UsageError("U is not a subgroup of G");
  const std::size_t index = g.order() / u.order();

  CosetAction a;
  a.u_ = u;
  auto u_orbits = orbits(u.degree(), u.generators());
  a.key_orbit_ = *std::min_element(u_orbits.begin(), u_orbits.end(), [](const auto& x, const auto& y) {
    return (x.size() > 1 ? x.size() : SIZE_MAX) < (y.size() > 1 ? y.size() : SIZE_MAX);
  });

  // Cosets are discovered breadth first from U itself; buckets are kept in a
  // sorted key list so lookups stay logarithmic.
  auto insert = [&](Permutation rep) {
    const std::uint64_t key = a.key_of(rep);
    auto it = std::lower_bound(a.bucket_keys_.begin(), a.bucket_keys_.end(), key);
    auto pos = static_cast<std::size_t>(it - a.bucket_keys_.begin());
    if (it == a.bucket_keys_.end() || *it != key) {
      a.bucket_keys_.insert(it, key);
      a.buckets_.insert(a.buckets_.begin() + static_cast<std::ptrdiff_t>(pos), std::vector<std::size_t>{});
    }
    a.buckets_[pos].push_back(a.reps_.size());
    a.reps_.push_back(std::move(rep));
  };
  insert(Permutation(g.degree()));
  for (std::size_t i = 0; i < a.reps_.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = a.reps_[i] * s;
      if (!a.find_coset(c)) insert(std::move(c));
    }
    if (a.reps_.size() > index) throw DataIntegrityError("coset enumeration overran the index");
  }
  if (a.reps_.size() != index) throw DataIntegrityError("coset enumeration did not reach the index");

  for (const auto& s : g.generators()) a.generator_images_.push_back(a.image_of(s));
  a.image_ = build_group(index, a.generator_images_);
  return a;
}

std::optional<std::uint64_t> core_order(const CosetAction& action, const GroupHandle& u,
                                        std::uint64_t cap) {
  if (u.order() > cap) return std::nullopt;
  std::uint64_t n = 0;
  for_each_element(u, [&](const Permutation& p) { n += action.image_of(p).is_identity(); }, cap);
  return n;
}

}  // namespace tql
