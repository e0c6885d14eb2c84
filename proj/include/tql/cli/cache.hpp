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

#ifndef TQL_CLI_CACHE_HPP
#define TQL_CLI_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tql::cli {

inline constexpr const char* kToolVersion = "tql 0.1.0";

std::string sha256_hex(std::string_view data);
/// SHA-256 of the file contents; throws UsageError if unreadable.
std::string file_digest(const std::filesystem::path& path);

struct RunRecord {
  std::string key;
  std::string command;
  std::string spec;
  std::uint64_t seed = 0;
  double seconds = 0;
  /// The serialized JSON payload, stored verbatim so a hit reproduces it
  /// byte for byte.
  std::string payload;
  std::string version = kToolVersion;
};

/// Key over the command, its normalized configuration, the seed and the
/// digests of every data file read.
std::string cache_key(std::string_view command, std::string_view normalized_config, std::uint64_t seed,
                      const std::vector<std::string>& file_digests);

/// Append-only JSON-lines store in <dir>/runs.jsonl. Appends take an
/// exclusive file lock, so concurrent processes never interleave lines.
class RunCache {
 public:
  explicit RunCache(std::filesystem::path dir);

  /// First record with this key, if any.
  std::optional<RunRecord> lookup(std::string_view key) const;
  void append(const RunRecord& record) const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
};

}  // namespace tql::cli

#endif  // TQL_CLI_CACHE_HPP
