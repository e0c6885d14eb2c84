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

#ifndef TQL_EPISEARCH_INDUCED_HPP
#define TQL_EPISEARCH_INDUCED_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>

#include "tql/episearch/tuples.hpp"
#include "tql/fuchsian/triangle_rep.hpp"

namespace tql {

/// x y as words evaluated in G, left to right.
Permutation evaluate_word(const TriangleWord& w, const Permutation& x, const Permutation& y);

struct InducedQuadrupleOptions {
  /// Conjugators are products of at most this many Schreier generators.
  std::size_t conjugator_length = 2;
  /// Stop after this many certified systems.
  std::uint64_t max_certified = 4096;
};

struct InducedQuadruple {
  /// c1, c2, c3, d as words in x, y.
  std::array<TriangleWord, 4> words;
  /// Their images in U.
  GeneratingQuadruple images;
};

struct InducedQuadrupleReport {
  std::optional<InducedQuadruple> first;
  /// n = |c1 c2| over every certified system found.
  std::set<std::uint64_t> n_values;
  std::uint64_t candidates = 0;
  std::uint64_t certified = 0;
  /// The four words also generate the point stabilizer of the degree 7
  /// image, so they lie in and fill the preimage at that level.
  bool projection_check = false;
};

/// Canonical (2,2,2,3) systems of the preimage of an index-7 subgroup U
/// under the surjection (2,3,7) -> H given by the triple. c1, c2 are
/// conjugates of the elliptic Schreier elements by short words of the
/// preimage, d is fixed, and c3 = (c1 c2)^-1 d^-1 is accepted only when it
/// is an involution of (2,3,7), decided exactly in the faithful matrix
/// representation. A system is certified when its images generate U.
/// Throws UsageError unless U has index 7 with three x-fixed cosets and
/// one y-fixed coset.
InducedQuadrupleReport induced_quadruple(const GroupHandle& h, const GeneratingTriple& triple, const GroupHandle& u,
                                         const InducedQuadrupleOptions& opt = {});

}  // namespace tql

#endif  // TQL_EPISEARCH_INDUCED_HPP
