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

#ifndef TQL_FUCHSIAN_SIGNATURE_HPP
#define TQL_FUCHSIAN_SIGNATURE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tql/fuchsian/rational.hpp"
#include "tql/perm/permutation.hpp"

namespace tql {

/// Orientable orbifold signature (h; m_1, ..., m_r). Periods are kept
/// sorted ascending.
struct Signature {
  std::int64_t genus = 0;
  std::vector<std::int64_t> periods;

  Signature() = default;
  Signature(std::int64_t h, std::vector<std::int64_t> ms);

  /// "(0;2,3,7)"; no periods prints as "(1;)".
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Accepts "(h;m1,m2,...)" with optional whitespace; "(h;)" for no periods.
Signature parse_signature(std::string_view text);

/// 2 - 2h - sum(1 - 1/m_i).
Rational euler_characteristic(const Signature& s);

/// chi(sub)/chi(parent) when both are negative and the ratio is a positive
/// integer; otherwise throws UsageError (not a finite-index candidate).
std::int64_t subgroup_index(const Signature& sub, const Signature& parent);

/// Genus g = 1 - |G| chi(s)/2 of the surface covering the orbifold with
/// deck group of the given order. Throws UsageError unless g is an integer
/// >= 2.
std::int64_t surface_genus_from_order(std::uint64_t order, const Signature& s);

/// Signature of the index-`index` subgroup whose coset action sends the
/// i-th canonical generator of the genus-0 `parent` to images[i]. A cycle
/// of length l < m_i contributes a period m_i/l; the genus comes from
/// chi(sub) = index * chi(parent).
Signature subgroup_signature(const Signature& parent, std::span<const Permutation> images,
                             std::int64_t index);

/// Candidate signatures of index-d subgroups of a genus-0 signature group
/// that satisfy the Riemann-Hurwitz and branching conditions. These are
/// necessary conditions only; realizability is not checked.
std::vector<Signature> enumerate_subgroup_signatures(const Signature& parent, std::int64_t d);

/// Indices d <= max_index with a candidate of genus 0 and exactly three
/// periods.
std::vector<std::int64_t> triangle_subgroup_indices(const Signature& parent, std::int64_t max_index);

}  // namespace tql

#endif  // TQL_FUCHSIAN_SIGNATURE_HPP
