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

#ifndef TQL_ZOO_GROUP_SPEC_HPP
#define TQL_ZOO_GROUP_SPEC_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tql/perm/group.hpp"

namespace tql {

enum class GroupFamily { kPsl2, kPgl2, kSym, kAlt, kDihedral, kCyclic, kProduct, kFile };

/// Parsed group specifier: `psl2:q`, `pgl2:q`, `sym:n`, `alt:n`, `dih:n`,
/// `cyc:n`, `prod:<spec>,<spec>` or `file:<path>`. A product splits at the
/// first comma, so only its second factor may itself be a product.
struct GroupSpec {
  GroupFamily family = GroupFamily::kCyclic;
  std::uint64_t parameter = 0;
  std::vector<GroupSpec> factors;
  std::string path;

  std::string to_string() const;
};

GroupSpec parse_group_spec(std::string_view text);

/// Where `file:` specs are looked up after the literal path: the directory
/// itself, then with a `.gens` suffix.
std::filesystem::path default_data_dir();

/// Resolved path of a `file:` spec, or the literal path if nothing matches.
std::filesystem::path resolve_group_file(const std::string& path,
                                         const std::filesystem::path& data_dir = default_data_dir());

GroupHandle build_from_spec(const GroupSpec& spec,
                            const std::filesystem::path& data_dir = default_data_dir());

/// Every file a spec reads, resolved (for cache keys).
std::vector<std::filesystem::path> spec_files(const GroupSpec& spec,
                                              const std::filesystem::path& data_dir = default_data_dir());

}  // namespace tql

#endif  // TQL_ZOO_GROUP_SPEC_HPP
