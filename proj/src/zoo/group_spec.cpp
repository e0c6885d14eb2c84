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

#include "tql/zoo/group_spec.hpp"

#include <charconv>

#include "tql/error.hpp"
#include "tql/zoo/generator_file.hpp"
#include "tql/zoo/zoo.hpp"

#ifndef TQL_DATA_DIR
#define TQL_DATA_DIR "data/groups"
#endif

namespace tql {

namespace {

struct FamilyName {
  std::string_view tag;
  GroupFamily family;
};

constexpr FamilyName kFamilies[] = {
    {"psl2", GroupFamily::kPsl2}, {"pgl2", GroupFamily::kPgl2},    {"sym", GroupFamily::kSym},
    {"alt", GroupFamily::kAlt},   {"dih", GroupFamily::kDihedral}, {"cyc", GroupFamily::kCyclic},
    {"prod", GroupFamily::kProduct}, {"file", GroupFamily::kFile},
};

std::string_view tag_of(GroupFamily f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.tag;
  return "?";
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::string out(tag_of(family));
  out += ':';
  switch (family) {
    case GroupFamily::kProduct:
      return out + factors.at(0).to_string() + "," + factors.at(1).to_string();
    case GroupFamily::kFile:
      return out + path;
    default:
      return out + std::to_string(parameter);
  }
}

GroupSpec parse_group_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError("group spec needs 'family:argument': " + std::string(text));
  std::string_view tag = text.substr(0, colon);
  std::string_view arg = text.substr(colon + 1);
  GroupSpec spec;
  bool known = false;
  for (const auto& e : kFamilies)
    if (e.tag == tag) {
      spec.family = e.family;
      known = true;
    }
  if (!known) throw UsageError("unknown group family '" + std::string(tag) + "'");

  switch (spec.family) {
    case GroupFamily::kProduct: {
      auto comma = arg.find(',');
      if (comma == std::string_view::npos) throw UsageError("prod: needs two comma-separated specs");
      spec.factors.push_back(parse_group_spec(arg.substr(0, comma)));
      spec.factors.push_back(parse_group_spec(arg.substr(comma + 1)));
      break;
    }
    case GroupFamily::kFile:
      if (arg.empty()) throw UsageError("file: needs a path");
      spec.path = std::string(arg);
      break;
    default: {
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), spec.parameter);
      if (ec != std::errc() || ptr != arg.data() + arg.size() || spec.parameter == 0)
        throw UsageError("expected a positive integer in group spec: " + std::string(text));
      break;
    }
  }
  return spec;
}

std::filesystem::path default_data_dir() { return TQL_DATA_DIR; }

std::filesystem::path resolve_group_file(const std::string& path, const std::filesystem::path& data_dir) {
  namespace fs = std::filesystem;
  for (fs::path candidate : {fs::path(path), data_dir / path, data_dir / (path + ".gens")})
    if (fs::is_regular_file(candidate)) return candidate;
  return path;
}

GroupHandle build_from_spec(const GroupSpec& spec, const std::filesystem::path& data_dir) {
  switch (spec.family) {
    case GroupFamily::kPsl2:
      return make_psl2(spec.parameter);
    case GroupFamily::kPgl2:
      return make_pgl2(spec.parameter);
    case GroupFamily::kSym:
      return make_standard(StandardFamily::kSymmetric, spec.parameter);
    case GroupFamily::kAlt:
      return make_standard(StandardFamily::kAlternating, spec.parameter);
    case GroupFamily::kDihedral:
      return make_standard(StandardFamily::kDihedral, spec.parameter);
    case GroupFamily::kCyclic:
      return make_standard(StandardFamily::kCyclic, spec.parameter);
    case GroupFamily::kProduct:
      return direct_product(build_from_spec(spec.factors.at(0), data_dir),
                            build_from_spec(spec.factors.at(1), data_dir));
    case GroupFamily::kFile:
      return load_group(resolve_group_file(spec.path, data_dir));
  }
  throw UsageError("unhandled group family");
}

std::vector<std::filesystem::path> spec_files(const GroupSpec& spec, const std::filesystem::path& data_dir) {
  std::vector<std::filesystem::path> out;
  if (spec.family == GroupFamily::kFile) out.push_back(resolve_group_file(spec.path, data_dir));
  for (const auto& f : spec.factors)
    for (auto& p : spec_files(f, data_dir)) out.push_back(std::move(p));
  return out;
}

}  // namespace tql
