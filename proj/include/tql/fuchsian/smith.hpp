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

#ifndef TQL_FUCHSIAN_SMITH_HPP
#define TQL_FUCHSIAN_SMITH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tql/fuchsian/signature.hpp"

namespace tql {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Diagonal of the Smith normal form, d_1 | d_2 | ... (length min(rows,
/// cols), zeros last).
std::vector<std::int64_t> smith_invariants(IntMatrix m);

/// Relation matrix of the abelianized genus-0 part: one row m_i e_i per
/// period and one all-ones row for the product relation.
IntMatrix relation_matrix(const Signature& s);

struct Abelianization {
  /// Invariant factors > 1, ascending and each dividing the next.
  std::vector<std::int64_t> torsion;
  std::int64_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  /// "Z7 x Z7", "Z^2", "trivial".
  std::string to_string() const;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization(const Signature& s);

/// Exact determinant (fraction-free Bareiss).
std::int64_t determinant(IntMatrix m);

/// gcd of the determinants of all k x k minors (k = number of columns) of
/// a matrix with one more row than columns.
std::int64_t maximal_minor_gcd(const IntMatrix& m);

}  // namespace tql

#endif  // TQL_FUCHSIAN_SMITH_HPP
