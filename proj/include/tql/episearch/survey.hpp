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

#ifndef TQL_EPISEARCH_SURVEY_HPP
#define TQL_EPISEARCH_SURVEY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tql/episearch/tuples.hpp"

namespace tql {

inline constexpr std::uint64_t kDefaultSurveyLimit = 50;

/// Arithmetic prediction for PSL2(q) being Hurwitz: q = 7, q = p with
/// p = +-1 mod 7, or q = p^3 with p = +-2, +-3 mod 7.
bool psl2_hurwitz_criterion(std::uint64_t q);

struct SurveyRow {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t f = 0;
  std::uint64_t group_order = 0;
  std::uint64_t triples = 0;
  std::optional<std::uint64_t> class_count;
  /// Orbits under PGL2(q) conjugation, total / |PGL2(q)|.
  std::uint64_t pgl_class_count = 0;
  std::uint64_t inner_class_count = 0;
  std::optional<std::uint64_t> genus;
  bool predicted = false;
  bool hurwitz() const { return triples > 0; }
  bool consistent() const { return hurwitz() == predicted; }
};

struct SurveyTable {
  std::vector<SurveyRow> rows;
  bool consistent() const;
  std::vector<std::uint64_t> hurwitz_set() const;
};

/// One row per prime power 4 <= q <= q_max. Throws UsageError when q_max
/// exceeds the limit. Mismatches are reported in the rows, and callers
/// treat them as hard failures.
SurveyTable hurwitz_survey_psl2(std::uint64_t q_max, const SearchOptions& opt = {},
                                std::uint64_t limit = kDefaultSurveyLimit);

}  // namespace tql

#endif  // TQL_EPISEARCH_SURVEY_HPP
