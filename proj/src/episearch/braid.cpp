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

#include "tql/episearch/braid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "tql/episearch/kernels.hpp"
#include "tql/error.hpp"
#include "tql/perm/subgroup.hpp"

namespace tql {

namespace {

struct Key {
  std::vector<Point> images;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : k.images) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Key key_of(const Permutation& a, const Permutation& b, const Permutation& c) {
  Key k;
  for (const auto* p : {&a, &b, &c}) k.images.insert(k.images.end(), p->images().begin(), p->images().end());
  return k;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

std::vector<GeneratingQuadruple> all_quadruples(const GroupHandle& g, std::uint64_t work_cap,
                                                const SearchOptions& opt) {
  auto involutions = elements_of_order(g, 2, opt.enumeration_cap);
  const std::uint64_t n = involutions.size();
  if (n * n * n > work_cap)
    throw CapExceeded(std::to_string(n) + " involutions are too many to list every quadruple");
  GenerationTester gen(g);
  std::vector<GeneratingQuadruple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Permutation p = involutions[i] * involutions[a];
      for (std::size_t b = 0; b < n; ++b) {
        Permutation x4 = (p * involutions[b]).inverse();
        if (element_order(x4) != 3) continue;
        std::vector<Permutation> gens{involutions[i], involutions[a], involutions[b]};
        if (!generates(g, gens, position_seed(opt.seed, i, a, b))) continue;
        out.push_back({involutions[i], involutions[a], involutions[b], x4, element_order(p)});
      }
    }
  return out;
}

BraidClassReport quadruple_braid_classes(const GroupHandle& g, std::uint64_t work_cap, const SearchOptions& opt) {
  auto quads = all_quadruples(g, work_cap, opt);
  std::unordered_map<Key, std::size_t, KeyHash> index;
  for (std::size_t i = 0; i < quads.size(); ++i) index.emplace(key_of(quads[i].x1, quads[i].x2, quads[i].x3), i);

  std::vector<std::size_t> parent(quads.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto join = [&](std::size_t i, const Permutation& a, const Permutation& b, const Permutation& c) {
    auto it = index.find(key_of(a, b, c));
    if (it == index.end()) throw DataIntegrityError("a braid move left the set of generating quadruples");
    parent[find_root(parent, i)] = find_root(parent, it->second);
  };
  // Each move permutes the finite set, so joining along forward moves
  // already yields the orbits of the generated group.
  for (std::size_t i = 0; i < quads.size(); ++i) {
    const auto& q = quads[i];
    join(i, q.x1 * q.x2 * q.x1.inverse(), q.x1, q.x3);
    join(i, q.x1, q.x2 * q.x3 * q.x2.inverse(), q.x2);
    // sigma_3 twice sends (x3, x4) to (w x3 w^-1, w x4 w^-1) with w = x3 x4.
    Permutation w = q.x3 * q.x4;
    join(i, q.x1, q.x2, q.x3.conjugate_by(w.inverse()));
    for (const auto& s : g.generators()) join(i, q.x1.conjugate_by(s), q.x2.conjugate_by(s), q.x3.conjugate_by(s));
  }
  std::unordered_map<std::size_t, std::uint64_t> sizes;
  for (std::size_t i = 0; i < quads.size(); ++i) ++sizes[find_root(parent, i)];
  BraidClassReport r;
  r.quadruples = quads.size();
  for (auto [root, s] : sizes) r.orbit_sizes.push_back(s);
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::greater<>());
  return r;
}

}  // namespace tql
