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

#include "tql/episearch/classify.hpp"

#include "tql/error.hpp"
#include "tql/fuchsian/signature.hpp"

namespace tql {

bool flags_consistent(const ClassificationFlags& f) {
  if (f.bounded_surface && !f.handlebody) return false;
  if (f.handlebody && !f.maximal_reducible) return false;
  if (f.g7 && !f.maximal_reducible) return false;
  return true;
}

ClassificationReport classify(const GroupHandle& g, const SearchOptions& opt) {
  ClassificationReport r;
  r.triples = find_triples(g, kHurwitzType, opt);
  r.quadruples = find_quadruples(g, std::nullopt, opt);
  r.n_set = r.quadruples.n_set();

  r.flags.hurwitz = r.triples.total > 0;
  r.flags.maximal_reducible = r.quadruples.total > 0;
  for (std::uint64_t n : {2, 3, 4, 5})
    if (r.n_set.count(n)) r.flags.handlebody = true;
  r.flags.bounded_surface = r.n_set.count(2) > 0;
  r.flags.g7 = r.n_set.count(7) > 0;
  if (!flags_consistent(r.flags)) throw DataIntegrityError("classification flags violate their implications");

  auto genus = [&](const char* sig) {
    return static_cast<std::uint64_t>(surface_genus_from_order(g.order(), parse_signature(sig)));
  };
  if (r.flags.hurwitz) r.hurwitz_genus = genus("(0;2,3,7)");
  if (r.flags.maximal_reducible) r.reducible_genus = genus("(0;2,2,2,3)");

  if (r.triples.witness) r.witnesses_valid &= validate_triple(g, *r.triples.witness);
  for (const auto& [n, q] : r.quadruples.witnesses) r.witnesses_valid &= validate_quadruple(g, q);
  if (!r.witnesses_valid) throw DataIntegrityError("a search witness failed independent re-validation");
  return r;
}

}  // namespace tql
