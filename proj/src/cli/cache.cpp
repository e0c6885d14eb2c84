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

#include "tql/cli/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tql/error.hpp"

namespace tql::cli {

namespace {

using Json = nlohmann::ordered_json;

Json record_json(const RunRecord& r) {
  return Json{{"key", r.key},         {"command", r.command}, {"spec", r.spec},
              {"seed", r.seed},       {"seconds", r.seconds}, {"version", r.version},
              {"payload", r.payload}};
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

std::string cache_key(std::string_view command, std::string_view normalized_config, std::uint64_t seed,
                      const std::vector<std::string>& file_digests) {
  Json j{{"command", command}, {"config", normalized_config}, {"seed", seed}, {"files", file_digests}};
  return sha256_hex(j.dump());
}

RunCache::RunCache(std::filesystem::path dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create cache directory " + dir.string() + ": " + ec.message());
  file_ = dir / "runs.jsonl";
}

std::optional<RunRecord> RunCache::lookup(std::string_view key) const {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    // A torn or foreign line is skipped rather than trusted.
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.value("key", "") != key) continue;
    RunRecord r;
    r.key = j["key"];
    r.command = j.value("command", "");
    r.spec = j.value("spec", "");
    r.seed = j.value("seed", std::uint64_t{0});
    r.seconds = j.value("seconds", 0.0);
    r.version = j.value("version", "");
    r.payload = j.value("payload", "");
    return r;
  }
  return std::nullopt;
}

void RunCache::append(const RunRecord& record) const {
  const std::string line = record_json(record).dump() + "\n";
  int fd = ::open(file_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
  if (fd < 0) throw UsageError("cannot open cache file " + file_.string());
  ::flock(fd, LOCK_EX);
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n <= 0) break;
    done += static_cast<std::size_t>(n);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (done != line.size()) throw Error("short write to cache file " + file_.string());
}

}  // namespace tql::cli
