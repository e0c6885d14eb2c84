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

#include "tql/episearch/tuples.hpp"

#include "tql/episearch/kernels.hpp"
#include "tql/error.hpp"
#include "tql/perm/subgroup.hpp"

namespace tql {

namespace {

std::optional<std::uint64_t> divide_by_aut(std::uint64_t total, const GroupHandle& g) {
  const auto& aut = g.metadata().aut_order;
  if (!aut) return std::nullopt;
  // Automorphisms act freely on generating tuples, so this must be exact.
  if (total % *aut != 0)
    throw DataIntegrityError("aut_order " + std::to_string(*aut) + " does not divide the tuple count " +
                             std::to_string(total) + " for " + g.name());
  return total / *aut;
}

std::uint64_t inner_classes(std::uint64_t total, const GroupHandle& g, std::uint64_t cap) {
  if (total == 0) return 0;
  const std::uint64_t inn = g.order() / center_order(g, cap);
  if (total % inn != 0) throw DataIntegrityError("inner automorphisms do not act freely on tuples");
  return total / inn;
}

}  // namespace

std::set<std::uint64_t> QuadrupleReport::n_set() const {
  std::set<std::uint64_t> out;
  for (auto [n, c] : n_distribution)
    if (c > 0) out.insert(n);
  return out;
}

std::optional<GeneratingTriple> make_triple(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) return std::nullopt;
  return GeneratingTriple{x, y, (x * y).inverse()};
}

bool validate_triple(const GroupHandle& g, const GeneratingTriple& t, TripleType type) {
  if (!g.contains(t.x) || !g.contains(t.y) || !g.contains(t.z)) return false;
  if (element_order(t.x) != type[0] || element_order(t.y) != type[1] || element_order(t.z) != type[2]) return false;
  if (!(t.x * t.y * t.z).is_identity()) return false;
  return generated_order(g.degree(), std::vector<Permutation>{t.x, t.y}) == g.order();
}

bool validate_quadruple(const GroupHandle& g, const GeneratingQuadruple& q) {
  for (const auto* p : {&q.x1, &q.x2, &q.x3, &q.x4})
    if (!g.contains(*p)) return false;
  if (element_order(q.x1) != 2 || element_order(q.x2) != 2 || element_order(q.x3) != 2 ||
      element_order(q.x4) != 3)
    return false;
  if (!(q.x1 * q.x2 * q.x3 * q.x4).is_identity()) return false;
  if (element_order(q.x1 * q.x2) != q.n || element_order(q.x3 * q.x4) != q.n) return false;
  return generated_order(g.degree(), std::vector<Permutation>{q.x1, q.x2, q.x3}) == g.order();
}

std::uint64_t center_order(const GroupHandle& g, std::uint64_t cap) {
  std::uint64_t n = 0;
  for_each_element(
      g,
      [&](const Permutation& p) {
        for (const auto& s : g.generators())
          if (p * s != s * p) return;
        ++n;
      },
      cap);
  return n;
}

TripleReport find_triples(const GroupHandle& g, TripleType type, const SearchOptions& opt) {
  require_enumerable(g, opt.enumeration_cap);
  TripleReport r;
  r.type = type;
  r.group_order = g.order();
  r.aut_order = g.metadata().aut_order;
  r.outer_classes = conjugacy_classes(g, type[0], opt.enumeration_cap);
  r.inner_elements = elements_of_order(g, type[1], opt.enumeration_cap);

  std::vector<Permutation> reps;
  std::vector<std::uint64_t> weight;
  for (const auto& c : r.outer_classes) {
    reps.push_back(c.representative);
    weight.push_back(c.size);
  }
  GenerationTester gen(g);
  TripleScan scan = opt.kernel == Kernel::kSerial
                        ? scan_triples_serial(gen, reps, weight, r.inner_elements, type[2], opt.seed, opt.collect_hits)
                        : scan_triples_parallel(gen, reps, weight, r.inner_elements, type[2], opt.seed,
                                                opt.collect_hits, opt.threads);
  r.total = scan.total;
  r.class_count = divide_by_aut(r.total, g);
  r.inner_class_count = inner_classes(r.total, g, opt.enumeration_cap);
  if (scan.first) r.witness = make_triple(reps[scan.first->first], r.inner_elements[scan.first->second]);
  r.hits = std::move(scan.hits);
  return r;
}

QuadrupleReport find_quadruples(const GroupHandle& g, std::optional<std::set<std::uint64_t>> n_filter,
                                const SearchOptions& opt) {
  require_enumerable(g, opt.enumeration_cap);
  QuadrupleReport r;
  r.group_order = g.order();
  r.aut_order = g.metadata().aut_order;
  r.n_filter = n_filter;
  std::vector<Permutation> involutions = elements_of_order(g, 2, opt.enumeration_cap);
  r.involution_count = involutions.size();
  if (!n_filter && involutions.size() > opt.involution_cap)
    throw CapExceeded(std::to_string(involutions.size()) + " involutions exceed the quadruple search cap of " +
                      std::to_string(opt.involution_cap) + "; supply an n filter");

  std::vector<Permutation> reps;
  std::vector<std::uint64_t> weight;
  for (const auto& c : classes_of(g, involutions)) {
    reps.push_back(c.representative);
    weight.push_back(c.size);
  }
  GenerationTester gen(g);
  QuadrupleScan scan = opt.kernel == Kernel::kSerial
                           ? scan_quadruples_serial(gen, reps, weight, involutions, n_filter, opt.seed)
                           : scan_quadruples_parallel(gen, reps, weight, involutions, n_filter, opt.seed, opt.threads);
  r.n_distribution = scan.counts;
  for (auto [n, c] : scan.counts) r.total += c;
  r.class_count = divide_by_aut(r.total, g);
  r.inner_class_count = inner_classes(r.total, g, opt.enumeration_cap);
  for (auto [n, pos] : scan.first) {
    auto [i, a, b] = pos;
    GeneratingQuadruple q{reps[i], involutions[a], involutions[b], Permutation(), n};
    q.x4 = (q.x1 * q.x2 * q.x3).inverse();
    r.witnesses.emplace(n, std::move(q));
  }
  return r;
}

}  // namespace tql
