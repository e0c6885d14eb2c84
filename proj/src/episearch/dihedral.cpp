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

#include "tql/episearch/dihedral.hpp"

#include "tql/error.hpp"

namespace tql {

namespace {

/// t a t == b, checked point by point without building products.
bool conjugates_to(const Permutation& t, const Permutation& a, const Permutation& b) {
  // (t a t)(i) = t(a(t(i))) under left-to-right composition.
  for (Point i = 0; i < t.degree(); ++i)
    if (t[a[t[i]]] != b[i]) return false;
  return true;
}

}  // namespace

std::optional<InversionWitness> inverting_involution_exists(const GroupHandle& g, std::uint64_t k,
                                                            const SearchOptions& opt) {
  auto classes = conjugacy_classes(g, k, opt.enumeration_cap);
  if (classes.empty()) return std::nullopt;
  auto involutions = elements_of_order(g, 2, opt.enumeration_cap);
  for (const auto& c : classes) {
    Permutation zi = c.representative.inverse();
    for (const auto& t : involutions)
      if (conjugates_to(t, c.representative, zi)) return InversionWitness{c.representative, t};
  }
  return std::nullopt;
}

GeneratingQuadruple g7_quadruple_from_triple(const GroupHandle& g, const GeneratingTriple& triple,
                                             const Permutation& t) {
  if (!validate_triple(g, triple)) throw UsageError("g7 construction needs a valid Hurwitz triple");
  const Permutation z = triple.x * triple.y;
  if (!g.contains(t) || element_order(t) != 2 || !conjugates_to(t, z, z.inverse()))
    throw UsageError("t is not an involution of G inverting the order-7 element");
  GeneratingQuadruple q{t, t * z.inverse(), triple.x, triple.y, 0};
  q.n = element_order(q.x1 * q.x2);
  return q;
}

std::optional<Permutation> extended_hurwitz_test(std::span<const Permutation> involutions,
                                                 const GeneratingTriple& triple) {
  const Permutation yi = triple.y.inverse();
  for (const auto& t : involutions)
    if (conjugates_to(t, triple.x, triple.x) && conjugates_to(t, triple.y, yi)) return t;
  return std::nullopt;
}

std::optional<Permutation> extended_hurwitz_test(const GroupHandle& g, const GeneratingTriple& triple,
                                                 const SearchOptions& opt) {
  auto involutions = elements_of_order(g, 2, opt.enumeration_cap);
  return extended_hurwitz_test(involutions, triple);
}

ExtensionSurvey survey_extensions(const GroupHandle& g, const SearchOptions& opt) {
  SearchOptions o = opt;
  o.collect_hits = true;
  TripleReport r = find_triples(g, kHurwitzType, o);
  ExtensionSurvey s;
  s.triples = r.total;
  const auto& involutions = r.outer_classes.empty() ? std::vector<Permutation>{}
                                                     : elements_of_order(g, 2, opt.enumeration_cap);
  for (auto [i, j] : r.hits) {
    auto triple = *make_triple(r.outer_classes[i].representative, r.inner_elements[j]);
    ++s.representatives_checked;
    if (auto t = extended_hurwitz_test(involutions, triple)) {
      s.extendable += r.outer_classes[i].size;
      if (!s.extendable_witness) {
        s.extendable_witness = triple;
        s.involution = *t;
      }
    } else if (!s.non_extendable_witness) {
      s.non_extendable_witness = triple;
    }
  }
  return s;
}

}  // namespace tql
