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

#ifndef TQL_CLI_CRITERIA_HPP
#define TQL_CLI_CRITERIA_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tql/episearch/tuples.hpp"

namespace tql::cli {

enum class Status { kPass, kFail, kSkip };
const char* status_name(Status s);

/// One reproduction item: a list of named checks with a time budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::kPass;
  /// "ok ..." / "FAILED ..." / "info ..." lines, in order.
  std::vector<std::string> details;
  double seconds = 0;
  double budget_seconds = 0;
};

struct CriterionContext {
  SearchOptions search;
  std::filesystem::path data_dir;
};

inline constexpr int kCriterionCount = 11;

/// Runs item uid=0(root) gid=0(root) groups=0(root) (1..11). Never throws for failed checks; exceptions from
/// the library are caught and reported as failures.
CriterionResult run_criterion(int id, const CriterionContext& ctx);

/// "fast", "full" or "data"; throws UsageError for anything else.
std::vector<int> suite_members(std::string_view suite);

/// One line: "[PASS] 1 <title> (0.12 s, budget 5 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace tql::cli

#endif  // TQL_CLI_CRITERIA_HPP
