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

#include "tql/episearch/subgroups.hpp"

#include <algorithm>
#include <map>

#include "tql/episearch/kernels.hpp"
#include "tql/error.hpp"
#include "tql/perm/subgroup.hpp"

namespace tql {

namespace {

struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::size_t> orbit_lengths;
  std::map<std::vector<std::size_t>, std::uint64_t> census;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupHandle& u, std::uint64_t census_cap) {
  Fingerprint f;
  f.order = u.order();
  for (const auto& o : orbits(u.degree(), u.generators())) f.orbit_lengths.push_back(o.size());
  std::sort(f.orbit_lengths.begin(), f.orbit_lengths.end());
  if (u.order() <= census_cap)
    for_each_element(u, [&](const Permutation& p) { ++f.census[p.cycle_type()]; }, census_cap);
  return f;
}

std::optional<std::vector<Permutation>> grow(const GroupHandle& g, std::uint64_t m, std::uint64_t attempt,
                                             const SubgroupSearchOptions& opt) {
  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (std::uint64_t d = 0; d < opt.draws && order < m; ++d) {
    Permutation y = random_element(g, position_seed(opt.seed, attempt, d, 0x5b));
    if (m % element_order(y) != 0) continue;
    gens.push_back(y);
    const std::uint64_t o = generated_order(g.degree(), gens);
    if (m % o == 0 && o > order) {
      order = o;
    } else {
      gens.pop_back();
    }
  }
  if (order != m) return std::nullopt;
  return gens;
}

const Signature& hurwitz_signature() {
  static const Signature s = parse_signature("(0;2,3,7)");
  return s;
}

}  // namespace

std::vector<GroupHandle> find_subgroups_of_order(const GroupHandle& g, std::uint64_t m,
                                                 const SubgroupSearchOptions& opt) {
  if (m == 0 || g.order() % m != 0)
    throw UsageError(std::to_string(m) + " does not divide the group order " + std::to_string(g.order()));
  if (m == g.order()) return {g};
  if (m == 1) return {build_group(g.degree(), {})};

  std::vector<std::optional<std::vector<Permutation>>> found(opt.attempts);
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t a = 0; a < opt.attempts; ++a) found[a] = grow(g, m, a, opt);

  // Merged in attempt order, so the list does not depend on scheduling.
  std::vector<GroupHandle> out;
  std::vector<Fingerprint> seen;
  for (auto& gens : found) {
    if (!gens) continue;
    GroupHandle u = build_group(g.degree(), std::move(*gens));
    Fingerprint f = fingerprint(u, opt.census_cap);
    if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
    seen.push_back(std::move(f));
    out.push_back(std::move(u));
  }
  return out;
}

Signature preimage_signature(const GroupHandle& g, const GeneratingTriple& triple, const GroupHandle& u) {
  CosetAction action = coset_action(g, u);
  std::vector<Permutation> images{action.image_of(triple.x), action.image_of(triple.y),
                                  action.image_of(triple.z)};
  return subgroup_signature(hurwitz_signature(), images, static_cast<std::int64_t>(action.degree()));
}

std::vector<SubgroupSignature> irreducible_subgroups(const GroupHandle& h, const GeneratingTriple& triple,
                                                     const SubgroupSearchOptions& opt) {
  if (!validate_triple(h, triple)) throw UsageError("not a generating (2,3,7) triple of the group");
  std::vector<SubgroupSignature> out;
  for (std::int64_t d : triangle_subgroup_indices(hurwitz_signature(), 24)) {
    const auto index = static_cast<std::uint64_t>(d);
    if (h.order() % index != 0) continue;
    for (auto& u : find_subgroups_of_order(h, h.order() / index, opt)) {
      Signature s = preimage_signature(h, triple, u);
      const bool irreducible = s.genus == 0 && s.periods.size() == 3;
      out.push_back({std::move(u), d, std::move(s), irreducible});
    }
  }
  return out;
}

bool Theorem1Report::confirmed() const {
  return hypothesis_met && image_order == 168 && image_perfect && signature &&
         *signature == parse_signature("(0;2,2,2,3)");
}

Theorem1Report theorem1_check(const GroupHandle& h, const GeneratingTriple& triple, const GroupHandle& u) {
  if (!validate_triple(h, triple)) throw UsageError("not a generating (2,3,7) triple of the group");
  if (u.order() * 7 != h.order()) throw UsageError("the subgroup does not have index 7");
  Theorem1Report r;
  r.subgroup_order = u.order();
  r.subgroups_examined = 1;
  CosetAction action = coset_action(h, u);
  std::vector<Permutation> images{action.image_of(triple.x), action.image_of(triple.y),
                                  action.image_of(triple.z)};
  r.signature = subgroup_signature(hurwitz_signature(), images, 7);
  r.hypothesis_met = *r.signature == parse_signature("(0;2,2,2,3)");
  r.image_order = action.image().order();
  r.image_perfect = is_perfect(action.image());
  r.subgroup = u;
  return r;
}

Theorem1Report theorem1_check(const GroupHandle& h, const GeneratingTriple& triple,
                              const SubgroupSearchOptions& opt) {
  if (!validate_triple(h, triple)) throw UsageError("not a generating (2,3,7) triple of the group");
  Theorem1Report r;
  if (h.order() % 7 != 0) return r;
  r.subgroup_order = h.order() / 7;
  auto candidates = find_subgroups_of_order(h, r.subgroup_order, opt);
  r.subgroups_examined = candidates.size();
  for (const auto& u : candidates) {
    Theorem1Report c = theorem1_check(h, triple, u);
    if (!c.hypothesis_met) continue;
    c.subgroups_examined = r.subgroups_examined;
    return c;
  }
  return r;
}

}  // namespace tql
