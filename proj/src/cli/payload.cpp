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

#include "tql/cli/payload.hpp"

#include <algorithm>
#include <sstream>

namespace tql::cli {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json n_set_json(const std::set<std::uint64_t>& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : ",") + scalar_text(e);
    return out.empty() ? "{}" : "{" + out + "}";
  }
  return v.dump();
}

bool is_record_array(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& lines,
             std::vector<std::pair<std::string, const Json*>>& tables) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, lines, tables);
    } else if (is_record_array(*it)) {
      tables.emplace_back(key, &*it);
    } else {
      lines.emplace_back(key, scalar_text(*it));
    }
  }
}

void render_records(std::ostringstream& out, const std::string& title, const Json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) columns.push_back(it.key());
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      auto it = row.find(columns[i]);
      line.push_back(it == row.end() ? "" : it->is_object() ? it->dump() : scalar_text(*it));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << title << ":\n";
  auto emit = [&](const std::vector<std::string>& line) {
    out << " ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << " " << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
    }
    out << "\n";
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

}  // namespace

Json to_json(const Permutation& p) { return to_cycle_string(p); }

Json to_json(const GeneratingTriple& t) { return Json{{"x", to_json(t.x)}, {"y", to_json(t.y)}, {"z", to_json(t.z)}}; }

Json to_json(const GeneratingQuadruple& q) {
  return Json{{"n", q.n}, {"x1", to_json(q.x1)}, {"x2", to_json(q.x2)}, {"x3", to_json(q.x3)}, {"x4", to_json(q.x4)}};
}

Json to_json(const TripleReport& r) {
  Json j;
  j["type"] = r.type;
  j["group_order"] = r.group_order;
  j["total"] = r.total;
  j["aut_order"] = optional_json(r.aut_order);
  j["class_count"] = optional_json(r.class_count);
  j["inner_class_count"] = r.inner_class_count;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const QuadrupleReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["involutions"] = r.involution_count;
  j["n_filter"] = r.n_filter ? n_set_json(*r.n_filter) : Json(nullptr);
  j["total"] = r.total;
  j["aut_order"] = optional_json(r.aut_order);
  j["class_count"] = optional_json(r.class_count);
  j["inner_class_count"] = r.inner_class_count;
  j["n_set"] = n_set_json(r.n_set());
  Json dist = Json::array();
  for (auto [n, c] : r.n_distribution) dist.push_back(Json{{"n", n}, {"count", c}});
  j["n_distribution"] = dist;
  Json wit = Json::array();
  for (const auto& [n, q] : r.witnesses) wit.push_back(to_json(q));
  j["witnesses"] = wit;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["group_order"] = r.triples.group_order;
  j["flags"] = Json{{"hurwitz", r.flags.hurwitz},
                    {"maximal_reducible", r.flags.maximal_reducible},
                    {"handlebody", r.flags.handlebody},
                    {"bounded_surface", r.flags.bounded_surface},
                    {"g7", r.flags.g7}};
  j["hurwitz_triples"] = r.triples.total;
  j["hurwitz_class_count"] = optional_json(r.triples.class_count);
  j["hurwitz_inner_class_count"] = r.triples.inner_class_count;
  j["quadruples"] = r.quadruples.total;
  j["n_set"] = n_set_json(r.n_set);
  std::set<std::uint64_t> handle_ns;
  for (auto n : r.n_set)
    if (n >= 2 && n <= 5) handle_ns.insert(n);
  j["handlebody_n"] = n_set_json(handle_ns);
  j["genera"] = Json{{"hurwitz", optional_json(r.hurwitz_genus)}, {"reducible", optional_json(r.reducible_genus)}};
  j["witnesses_valid"] = r.witnesses_valid;
  j["triple_witness"] = r.triples.witness ? to_json(*r.triples.witness) : Json(nullptr);
  Json wit = Json::array();
  for (const auto& [n, q] : r.quadruples.witnesses) wit.push_back(to_json(q));
  j["quadruple_witnesses"] = wit;
  return j;
}

Json to_json(const SurveyTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"q", r.q},
                        {"order", r.group_order},
                        {"predicted", r.predicted},
                        {"hurwitz", r.hurwitz()},
                        {"triples", r.triples},
                        {"class_count", optional_json(r.class_count)},
                        {"pgl_classes", r.pgl_class_count},
                        {"inner_classes", r.inner_class_count},
                        {"genus", optional_json(r.genus)}});
  return Json{{"consistent", t.consistent()}, {"hurwitz_set", t.hurwitz_set()}, {"rows", rows}};
}

Json to_json(const HandlesReport& r) {
  return Json{{"outer_genus", r.outer_genus}, {"inner_count", r.inner_count}, {"inner_genus", r.inner_genus}};
}

Json to_json(const Theorem1Report& r) {
  Json j;
  j["hypothesis_met"] = r.hypothesis_met;
  j["subgroup_order"] = r.subgroup_order;
  j["subgroups_examined"] = r.subgroups_examined;
  j["signature"] = r.signature ? Json(r.signature->to_string()) : Json(nullptr);
  j["image_order"] = r.image_order;
  j["image_perfect"] = r.image_perfect;
  j["confirmed"] = r.confirmed();
  if (!r.hypothesis_met) j["note"] = "no index-7 maximal reducible subgroup found";
  Json gens = Json::array();
  if (r.subgroup)
    for (const auto& g : r.subgroup->generators()) gens.push_back(to_json(g));
  j["subgroup_generators"] = gens;
  return j;
}

Json to_json(const InducedQuadrupleReport& r) {
  Json j;
  j["candidates"] = r.candidates;
  j["certified"] = r.certified;
  j["n_values"] = r.n_values;
  j["projection_check"] = r.projection_check;
  if (r.first) {
    Json words = Json::array();
    for (const auto& w : r.first->words) words.push_back(word_to_string(w));
    j["words"] = words;
    j["quadruple"] = to_json(r.first->images);
  } else {
    j["words"] = nullptr;
    j["quadruple"] = nullptr;
  }
  return j;
}

Json to_json(const ExtensionSurvey& s) {
  Json j;
  j["triples"] = s.triples;
  j["extendable"] = s.extendable;
  j["representatives_checked"] = s.representatives_checked;
  j["extendable_witness"] = s.extendable_witness ? to_json(*s.extendable_witness) : Json(nullptr);
  j["involution"] = s.involution ? to_json(*s.involution) : Json(nullptr);
  j["non_extendable_witness"] = s.non_extendable_witness ? to_json(*s.non_extendable_witness) : Json(nullptr);
  return j;
}

Json to_json(const BraidClassReport& r) {
  return Json{{"quadruples", r.quadruples}, {"orbits", r.orbit_count()}, {"orbit_sizes", r.orbit_sizes}};
}

Json to_json(const std::vector<SubgroupSignature>& subs) {
  Json rows = Json::array();
  bool any = false;
  for (const auto& s : subs) {
    any |= s.irreducible;
    rows.push_back(Json{{"index", s.index},
                        {"order", s.subgroup.order()},
                        {"signature", s.signature.to_string()},
                        {"irreducible", s.irreducible}});
  }
  return Json{{"irreducible_found", any}, {"subgroups", rows}};
}

GeneratingTriple triple_from_json(const Json& j, std::size_t degree) {
  return {parse_cycles(j.at("x").get<std::string>(), degree), parse_cycles(j.at("y").get<std::string>(), degree),
          parse_cycles(j.at("z").get<std::string>(), degree)};
}

GeneratingQuadruple quadruple_from_json(const Json& j, std::size_t degree) {
  return {parse_cycles(j.at("x1").get<std::string>(), degree), parse_cycles(j.at("x2").get<std::string>(), degree),
          parse_cycles(j.at("x3").get<std::string>(), degree), parse_cycles(j.at("x4").get<std::string>(), degree),
          j.at("n").get<std::uint64_t>()};
}

std::string render_table(const Json& payload) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::pair<std::string, const Json*>> tables;
  if (payload.is_object()) {
    flatten(payload, "", lines, tables);
  } else {
    lines.emplace_back("value", scalar_text(payload));
  }
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : lines) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  for (const auto& [k, rows] : tables) render_records(out, k, *rows);
  return out.str();
}

}  // namespace tql::cli
