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

#ifndef TQL_EPISEARCH_HANDLES_HPP
#define TQL_EPISEARCH_HANDLES_HPP

#include <cstdint>

namespace tql {

/// Boundary bookkeeping for a product with handles whose group G of order
/// N acts with quadrangle signature and whose Hurwitz subgroup action has
/// image of order M: the outer boundary has genus 1 + N/12 and the inner
/// boundary is N/M copies of a genus 1 + M/84 surface.
struct HandlesReport {
  std::uint64_t outer_genus = 0;
  std::uint64_t inner_count = 0;
  std::uint64_t inner_genus = 0;
};

/// Throws UsageError unless 12 | N, 84 | M and M | N.
HandlesReport handles_bookkeeping(std::uint64_t group_order, std::uint64_t triangle_image_order);

}  // namespace tql

#endif  // TQL_EPISEARCH_HANDLES_HPP
