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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tql/cli/app.hpp"
#include "tql/cli/cache.hpp"
#include "tql/cli/criteria.hpp"
#include "tql/cli/payload.hpp"
#include "tql/error.hpp"
#include "tql/zoo/zoo.hpp"

namespace tql::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result tql(std::vector<std::string> args) {
  args.insert(args.begin(), "tql");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tql_cli_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Payload, RoundTrips) {
  auto g = make_psl2(7);
  auto s4 = make_standard(StandardFamily::kSymmetric, 4);
  auto t = find_triples(g);
  auto q = find_quadruples(s4);
  for (const Json& j : {to_json(t), to_json(q), to_json(classify(s4)), to_json(handles_bookkeeping(336, 168))})
    EXPECT_EQ(Json::parse(j.dump()), j);
  auto back = triple_from_json(to_json(*t.witness), g.degree());
  EXPECT_EQ(back.x, t.witness->x);
  EXPECT_EQ(back.y, t.witness->y);
  EXPECT_EQ(back.z, t.witness->z);
  for (const auto& [n, w] : q.witnesses) {
    auto b = quadruple_from_json(to_json(w), s4.degree());
    EXPECT_EQ(b.x4, w.x4);
    EXPECT_EQ(b.n, n);
    EXPECT_TRUE(validate_quadruple(s4, b));
  }
}

TEST(Payload, WitnessesUseOneBasedCycles) {
  EXPECT_EQ(to_json(Permutation::from_cycles(4, {{0, 1}, {2, 3}})), "(1,2)(3,4)");
}

TEST(Payload, TableRendering) {
  Json j{{"a", 1}, {"b", Json{{"c", true}}}, {"rows", Json::array({Json{{"n", 2}, {"count", 5}}})}};
  auto text = render_table(j);
  EXPECT_NE(text.find("a    1"), std::string::npos);
  EXPECT_NE(text.find("b.c  true"), std::string::npos);
  EXPECT_NE(text.find("rows:"), std::string::npos);
}

TEST(Cli, SignatureGenus) {
  auto r = tql({"sig", "genus", "--order", "504", "--sig", "(0;2,3,7)", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r).at("genus"), 7);
}

TEST(Cli, SurveyBelowHurwitzRange) {
  auto r = tql({"--format", "json", "survey", "psl2", "--qmax", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json_of(r).at("hurwitz_set").empty());
}

TEST(Cli, ClassifyPsl227) {
  auto r = tql({"--format", "json", "classify", "psl2:27"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto flags = json_of(r).at("flags");
  EXPECT_TRUE(flags.at("maximal_reducible"));
  EXPECT_FALSE(flags.at("handlebody"));
  EXPECT_TRUE(flags.at("g7"));
}

TEST(Cli, WitnessesRevalidateFromPayload) {
  auto r = tql({"--format", "json", "hurwitz", "psl2:8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto g = make_psl2(8);
  EXPECT_TRUE(validate_triple(g, triple_from_json(json_of(r).at("witness"), g.degree())));
}

TEST(Cli, Theorem1InducedSystems) {
  auto r = tql({"--format", "json", "theorem1", "psl2:7", "--induced"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = json_of(r);
  EXPECT_TRUE(j.at("confirmed"));
  const auto& ind = j.at("induced");
  EXPECT_GT(ind.at("certified").get<std::uint64_t>(), 0u);
  EXPECT_TRUE(ind.at("projection_check"));
  EXPECT_EQ(ind.at("words").size(), 4u);
}

TEST(Cli, CacheHitIsByteIdentical) {
  auto dir = temp_dir("cache");
  auto first = tql({"--cache", dir.string(), "--format", "json", "quad", "psl2:8"});
  auto second = tql({"--cache", dir.string(), "--format", "json", "quad", "psl2:8", "--threads", "3"});
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
  std::ifstream in(dir / "runs.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 1);
  // A different seed is a different key.
  tql({"--cache", dir.string(), "--seed", "5", "--format", "json", "quad", "psl2:8"});
  RunCache cache(dir);
  EXPECT_TRUE(cache.lookup(cache_key("quad", Json{{"spec", "psl2:8"}, {"filter", nullptr}, {"nset", false}}.dump(), 5, {})));
  std::filesystem::remove_all(dir);
}

TEST(Cli, CacheFromEnvironment) {
  auto dir = temp_dir("env");
  ::setenv("TQL_CACHE", dir.string().c_str(), 1);
  auto r = tql({"handles", "--order", "84", "--triangle-image", "84"});
  ::unsetenv("TQL_CACHE");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "runs.jsonl"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(tql({"hurwitz", "nosuch:3"}).code, kExitUsage);
  EXPECT_EQ(tql({}).code, kExitUsage);
  EXPECT_EQ(tql({"repro", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(tql({"handles", "--order", "100", "--triangle-image", "84"}).code, kExitUsage);
  EXPECT_EQ(tql({"hurwitz", "sym:11"}).code, kExitCap);
  EXPECT_EQ(tql({"survey", "psl2", "--qmax", "60"}).code, kExitUsage);

  auto dir = temp_dir("data");
  std::ofstream(dir / "bad.gens") << "degree 4\norder 5\n(1,2,3,4)\n";
  EXPECT_EQ(tql({"--data-dir", dir.string(), "hurwitz", "file:bad"}).code, kExitIntegrity);
  std::filesystem::remove_all(dir);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(tql({"--help"}).code, kExitOk);
  auto v = tql({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("tql"), std::string::npos);
}

TEST(Criteria, Suites) {
  EXPECT_EQ(suite_members("data"), (std::vector<int>{9, 10}));
  EXPECT_THROW(suite_members("nosuch"), UsageError);
  EXPECT_THROW(run_criterion(12, {}), UsageError);
}

TEST(Criteria, GenusTablePasses) {
  auto r = run_criterion(4, {});
  EXPECT_EQ(r.status, Status::kPass);
  EXPECT_NE(summary_line(r).find("[PASS] 4"), std::string::npos);
}

}  // namespace
}  // namespace tql::cli
