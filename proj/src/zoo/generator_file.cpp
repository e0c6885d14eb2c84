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

#include "tql/zoo/generator_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tql/error.hpp"

namespace tql {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_count(std::string_view v, std::size_t line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw DataIntegrityError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(v) + "'");
  return out;
}

}  // namespace

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '(') {
      if (out.degree == 0) throw DataIntegrityError("line " + std::to_string(line_no) + ": generator before degree");
      try {
        out.generators.push_back(parse_cycles(line, out.degree));
      } catch (const UsageError& e) {
        throw DataIntegrityError("line " + std::to_string(line_no) + ": " + e.what());
      }
      continue;
    }
    auto sp = line.find_first_of(" \t");
    std::string_view key = line.substr(0, sp);
    std::string_view value = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "degree") {
      if (out.degree != 0) throw DataIntegrityError("line " + std::to_string(line_no) + ": repeated degree");
      out.degree = parse_count(value, line_no);
      if (out.degree == 0) throw DataIntegrityError("line " + std::to_string(line_no) + ": degree must be positive");
    } else if (key == "order") {
      out.metadata.known_order = parse_count(value, line_no);
    } else if (key == "aut_order") {
      out.metadata.aut_order = parse_count(value, line_no);
    } else if (key == "name") {
      out.metadata.name = std::string(value);
    } else {
      throw DataIntegrityError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (out.degree == 0) throw DataIntegrityError("missing degree line");
  return out;
}

std::string format_generator_file(const GeneratorFile& file) {
  std::ostringstream os;
  os << "degree " << file.degree << '\n';
  if (file.metadata.known_order) os << "order " << *file.metadata.known_order << '\n';
  if (file.metadata.aut_order) os << "aut_order " << *file.metadata.aut_order << '\n';
  if (!file.metadata.name.empty()) os << "name " << file.metadata.name << '\n';
  for (const auto& g : file.generators) os << to_cycle_string(g) << '\n';
  return os.str();
}

GroupHandle load_group(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open generator file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  GeneratorFile file;
  try {
    file = parse_generator_file(buf.str());
  } catch (const DataIntegrityError& e) {
    throw DataIntegrityError(path.string() + ": " + e.what());
  }
  if (file.metadata.name.empty()) file.metadata.name = path.stem().string();
  return build_group(file.degree, std::move(file.generators), std::move(file.metadata));
}

}  // namespace tql
