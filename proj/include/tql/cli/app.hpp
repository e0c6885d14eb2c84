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

#ifndef TQL_CLI_APP_HPP
#define TQL_CLI_APP_HPP

#include <iosfwd>

namespace tql::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitIntegrity = 4;
inline constexpr int kExitReproduction = 5;

/// Parses argv, runs one verb and writes its report. Returns the process
/// exit code: 0 ok, 2 usage, 3 cap refusal, 4 data integrity, 5 failed
/// reproduction or survey mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tql::cli

#endif  // TQL_CLI_APP_HPP
