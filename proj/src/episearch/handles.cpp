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

#include "tql/episearch/handles.hpp"

#include <string>

#include "tql/error.hpp"

namespace tql {

HandlesReport handles_bookkeeping(std::uint64_t group_order, std::uint64_t triangle_image_order) {
  const std::uint64_t n = group_order, m = triangle_image_order;
  if (n == 0 || m == 0) throw UsageError("orders must be positive");
  if (n % 12 != 0) throw UsageError("group order " + std::to_string(n) + " is not divisible by 12");
  if (m % 84 != 0) throw UsageError("triangle image order " + std::to_string(m) + " is not divisible by 84");
  if (n % m != 0) throw UsageError("triangle image order does not divide the group order");
  HandlesReport r{1 + n / 12, n / m, 1 + m / 84};
  // 84(g' - 1) copies times the count recovers 12(g - 1) = N.
  if (84 * (r.inner_genus - 1) * r.inner_count != 12 * (r.outer_genus - 1))
    throw DataIntegrityError("boundary genus identity failed");
  return r;
}

}  // namespace tql
