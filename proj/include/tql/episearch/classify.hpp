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

#ifndef TQL_EPISEARCH_CLASSIFY_HPP
#define TQL_EPISEARCH_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "tql/episearch/tuples.hpp"

namespace tql {

struct ClassificationFlags {
  bool hurwitz = false;
  bool maximal_reducible = false;
  /// Some n in {2,3,4,5}.
  bool handlebody = false;
  /// n = 2.
  bool bounded_surface = false;
  /// n = 7.
  bool g7 = false;
};

struct ClassificationReport {
  ClassificationFlags flags;
  TripleReport triples;
  QuadrupleReport quadruples;
  std::set<std::uint64_t> n_set;
  /// 1 + |G|/84 and 1 + |G|/12, present when the flag holds.
  std::optional<std::uint64_t> hurwitz_genus;
  std::optional<std::uint64_t> reducible_genus;
  /// Every witness passed validate_triple / validate_quadruple again.
  bool witnesses_valid = true;
};

/// Runs the Hurwitz triple and full quadruple searches and derives the
/// flags. The G_n reading of n is sound because exact orders embed both
/// D_n and the (2,3,n) factor, making the amalgam kernel torsion-free.
ClassificationReport classify(const GroupHandle& g, const SearchOptions& opt = {});

/// Checks bounded_surface => handlebody => maximal_reducible and
/// g7 => maximal_reducible.
bool flags_consistent(const ClassificationFlags& f);

}  // namespace tql

#endif  // TQL_EPISEARCH_CLASSIFY_HPP
