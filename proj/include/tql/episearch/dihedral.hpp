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

#ifndef TQL_EPISEARCH_DIHEDRAL_HPP
#define TQL_EPISEARCH_DIHEDRAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tql/episearch/tuples.hpp"

namespace tql {

struct InversionWitness {
  Permutation z;  ///< order k
  Permutation t;  ///< involution with t z t = z^-1
};

/// Some element of order k inverted by an involution, i.e. a dihedral
/// subgroup D_k. z runs over class representatives (the property is a
/// class invariant), t over all involutions.
std::optional<InversionWitness> inverting_involution_exists(const GroupHandle& g, std::uint64_t k,
                                                            const SearchOptions& opt = {});

/// With z = a b of order 7 and t inverting z: (t, t z^-1, a, b) is a
/// generating quadruple with n = 7. Throws UsageError when (a, b) is not a
/// Hurwitz triple of G or t does not invert z.
GeneratingQuadruple g7_quadruple_from_triple(const GroupHandle& g, const GeneratingTriple& triple,
                                             const Permutation& t);

/// An involution t with t x t = x and t y t = y^-1, i.e. the triple's
/// surjection extends to the extended triangle group [2,3,7].
std::optional<Permutation> extended_hurwitz_test(const GroupHandle& g, const GeneratingTriple& triple,
                                                 const SearchOptions& opt = {});
std::optional<Permutation> extended_hurwitz_test(std::span<const Permutation> involutions,
                                                 const GeneratingTriple& triple);

/// The extension test over every triple found with x a class
/// representative. Extendability is invariant under automorphisms, so the
/// weighted counts split the ordered triples exactly.
struct ExtensionSurvey {
  std::uint64_t triples = 0;
  std::uint64_t extendable = 0;
  std::uint64_t representatives_checked = 0;
  std::optional<GeneratingTriple> extendable_witness;
  std::optional<Permutation> involution;
  std::optional<GeneratingTriple> non_extendable_witness;
};
ExtensionSurvey survey_extensions(const GroupHandle& g, const SearchOptions& opt = {});

}  // namespace tql

#endif  // TQL_EPISEARCH_DIHEDRAL_HPP
