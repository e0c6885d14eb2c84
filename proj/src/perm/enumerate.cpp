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

#include "tql/perm/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tql/error.hpp"

namespace tql {

namespace {

/// Transversal indices per level in visiting order: base point first.
std::vector<std::vector<std::size_t>> visiting_order(const StabilizerChain& chain) {
  std::vector<std::vector<std::size_t>> order;
  for (const auto& L : chain.levels()) {
    std::vector<std::size_t> idx(L.orbit.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin() + 1, idx.end(),
              [&](std::size_t a, std::size_t b) { return L.orbit[a] < L.orbit[b]; });
    order.push_back(std::move(idx));
  }
  return order;
}

// The element for choices (u_0, ..., u_{k-1}) is u_{k-1} * ... * u_0, so the
// recursion multiplies each deeper choice on the left of the running product.
void descend(const StabilizerChain& chain, const std::vector<std::vector<std::size_t>>& order,
             std::size_t level, const Permutation& suffix,
             const std::function<void(const Permutation&)>& visit) {
  const auto& levels = chain.levels();
  if (level == levels.size()) {
    visit(suffix);
    return;
  }
  for (std::size_t k : order[level]) descend(chain, order, level + 1, levels[level].transversal[k] * suffix, visit);
}

}  // namespace

void require_enumerable(const GroupHandle& g, std::uint64_t cap) {
  if (g.order() > cap)
    throw CapExceeded("group of order " + std::to_string(g.order()) +
                      " exceeds the element enumeration cap of " + std::to_string(cap));
}

std::size_t enumeration_block_count(const GroupHandle& g) {
  const auto& levels = g.chain().levels();
  return levels.empty() ? 1 : levels.front().orbit.size();
}

void for_each_element_in_block(const GroupHandle& g, std::size_t block,
                               const std::function<void(const Permutation&)>& visit) {
  const auto& chain = g.chain();
  if (chain.levels().empty()) {
    if (block == 0) visit(Permutation(g.degree()));
    return;
  }
  auto order = visiting_order(chain);
  const std::size_t k = order[0].at(block);
  descend(chain, order, 1, chain.levels()[0].transversal[k], visit);
}

void for_each_element(const GroupHandle& g, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap) {
  require_enumerable(g, cap);
  const auto& chain = g.chain();
  auto order = visiting_order(chain);
  descend(chain, order, 0, Permutation(g.degree()), visit);
}

std::vector<Permutation> enumerate_elements(const GroupHandle& g, std::uint64_t cap) {
  std::vector<Permutation> out;
  require_enumerable(g, cap);
  out.reserve(g.order());
  for_each_element(g, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<Permutation> elements_of_order(const GroupHandle& g, std::uint64_t order,
                                           std::uint64_t cap) {
  require_enumerable(g, cap);
  const std::size_t blocks = enumeration_block_count(g);
  std::vector<std::vector<Permutation>> per_block(blocks);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < blocks; ++b) {
    for_each_element_in_block(g, b, [&](const Permutation& p) {
      if (element_order(p) == order) per_block[b].push_back(p);
    });
  }
  std::vector<Permutation> out;
  for (auto& v : per_block)
    for (auto& p : v) out.push_back(std::move(p));
  return out;
}

std::vector<ConjugacyClass> classes_of(const GroupHandle& g, const std::vector<Permutation>& elements) {
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  std::vector<bool> seen(elements.size(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Permutation& e = elements[queue[head]];
      for (const auto& s : g.generators()) {
        auto it = index.find(e.conjugate_by(s));
        if (it == index.end()) throw UsageError("element list is not closed under conjugation");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    classes.push_back({elements[start], queue.size(), element_order(elements[start])});
  }
  return classes;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupHandle& g,
                                              std::optional<std::uint64_t> order_filter,
                                              std::uint64_t cap) {
  if (order_filter) return classes_of(g, elements_of_order(g, *order_filter, cap));
  return classes_of(g, enumerate_elements(g, cap));
}

}  // namespace tql
