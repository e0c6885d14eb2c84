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

#ifndef TQL_CLI_PAYLOAD_HPP
#define TQL_CLI_PAYLOAD_HPP

#include <string>

#include <json.hpp>

#include "tql/episearch/braid.hpp"
#include "tql/episearch/classify.hpp"
#include "tql/episearch/dihedral.hpp"
#include "tql/episearch/handles.hpp"
#include "tql/episearch/induced.hpp"
#include "tql/episearch/subgroups.hpp"
#include "tql/episearch/survey.hpp"
#include "tql/episearch/tuples.hpp"

namespace tql::cli {

/// Insertion-ordered, so payloads serialize identically run to run.
using Json = nlohmann::ordered_json;

/// Witness permutations are written in 1-based cycle notation, the same as
/// generator files.
Json to_json(const Permutation& p);
Json to_json(const GeneratingTriple& t);
Json to_json(const GeneratingQuadruple& q);
Json to_json(const TripleReport& r);
Json to_json(const QuadrupleReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const SurveyTable& t);
Json to_json(const HandlesReport& r);
Json to_json(const Theorem1Report& r);
Json to_json(const InducedQuadrupleReport& r);
Json to_json(const ExtensionSurvey& s);
Json to_json(const BraidClassReport& r);
Json to_json(const std::vector<SubgroupSignature>& subs);

/// Reads a tuple back from its payload.
GeneratingTriple triple_from_json(const Json& j, std::size_t degree);
GeneratingQuadruple quadruple_from_json(const Json& j, std::size_t degree);

/// Human-readable rendering: scalars as aligned "key  value" lines, nested
/// objects with dotted keys, arrays of objects as tables.
std::string render_table(const Json& payload);

}  // namespace tql::cli

#endif  // TQL_CLI_PAYLOAD_HPP
