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

#ifndef TQL_ZOO_GENERATOR_FILE_HPP
#define TQL_ZOO_GENERATOR_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tql/perm/group.hpp"

namespace tql {

// Line-oriented text format:
//
//   # comment
//   degree 12
//   order 95040          (optional; checked against the computed order)
//   aut_order 190080     (optional)
//   name M12             (optional)
//   (1,2,3)(4,5,6)(7,8,9)
//   ...
//
// Points are 1-based. `degree` must precede the first generator.

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  GroupMetadata metadata;
};

/// Throws DataIntegrityError (with a line number) on malformed content.
GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const GeneratorFile& file);

/// Reads and builds; the declared order, when present, must match.
GroupHandle load_group(const std::filesystem::path& path);

}  // namespace tql

#endif  // TQL_ZOO_GENERATOR_FILE_HPP
