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

#ifndef TQL_PERM_ENUMERATE_HPP
#define TQL_PERM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tql/perm/group.hpp"

namespace tql {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Throws CapExceeded naming the cap when |G| is above it.
void require_enumerable(const GroupHandle& g, std::uint64_t cap);

/// Visits every element exactly once. Elements are products of one
/// transversal element per chain level; level 0 varies slowest and each
/// level lists its base point first, then the remaining orbit points in
/// increasing order. The identity is therefore always visited first.
void for_each_element(const GroupHandle& g, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// The slice of the enumeration whose level-0 transversal element is the
/// `block`-th one; blocks partition the group and concatenate in order.
void for_each_element_in_block(const GroupHandle& g, std::size_t block,
                               const std::function<void(const Permutation&)>& visit);
std::size_t enumeration_block_count(const GroupHandle& g);

std::vector<Permutation> enumerate_elements(const GroupHandle& g,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// Elements of exact order `order`, in enumeration order. Blocks are
/// scanned in parallel when OpenMP is enabled; the result does not depend
/// on the thread count.
std::vector<Permutation> elements_of_order(const GroupHandle& g, std::uint64_t order,
                                           std::uint64_t cap = kDefaultEnumerationCap);

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
};

/// Conjugacy classes (restricted to elements of exact order `order_filter`
/// when given). Representatives are the first class member in enumeration
/// order; classes are listed in order of their representatives.
std::vector<ConjugacyClass> conjugacy_classes(const GroupHandle& g,
                                              std::optional<std::uint64_t> order_filter = {},
                                              std::uint64_t cap = kDefaultEnumerationCap);

/// Same, starting from an explicit element list (all elements of one
/// order, say) that must be closed under conjugation.
std::vector<ConjugacyClass> classes_of(const GroupHandle& g, const std::vector<Permutation>& elements);

}  // namespace tql

#endif  // TQL_PERM_ENUMERATE_HPP
