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

#include "tql/episearch/survey.hpp"

#include "tql/error.hpp"
#include "tql/fuchsian/signature.hpp"
#include "tql/zoo/finite_field.hpp"
#include "tql/zoo/zoo.hpp"

namespace tql {

bool psl2_hurwitz_criterion(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) return false;
  auto [p, f] = *pp;
  const std::uint64_t r = p % 7;
  if (q == 7) return true;
  if (f == 1) return r == 1 || r == 6;
  if (f == 3) return r == 2 || r == 3 || r == 4 || r == 5;
  return false;
}

bool SurveyTable::consistent() const {
  for (const auto& row : rows)
    if (!row.consistent()) return false;
  return true;
}

std::vector<std::uint64_t> SurveyTable::hurwitz_set() const {
  std::vector<std::uint64_t> out;
  for (const auto& row : rows)
    if (row.hurwitz()) out.push_back(row.q);
  return out;
}

SurveyTable hurwitz_survey_psl2(std::uint64_t q_max, const SearchOptions& opt, std::uint64_t limit) {
  if (q_max > limit)
    throw UsageError("q_max " + std::to_string(q_max) + " exceeds the survey limit " + std::to_string(limit));
  SurveyTable table;
  for (std::uint64_t q = 4; q <= q_max; ++q) {
    auto pp = prime_power(q);
    if (!pp) continue;
    SurveyRow row;
    row.q = q;
    row.p = pp->first;
    row.f = pp->second;
    row.predicted = psl2_hurwitz_criterion(q);
    GroupHandle g = make_psl2(q);
    row.group_order = g.order();
    TripleReport r = find_triples(g, kHurwitzType, opt);
    row.triples = r.total;
    row.class_count = r.class_count;
    row.inner_class_count = r.inner_class_count;
    const std::uint64_t pgl = q * (q * q - 1);
    if (r.total % pgl != 0) throw DataIntegrityError("PGL2(q) does not act freely on the triples");
    row.pgl_class_count = r.total / pgl;
    if (row.hurwitz())
      row.genus = static_cast<std::uint64_t>(surface_genus_from_order(g.order(), parse_signature("(0;2,3,7)")));
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace tql
