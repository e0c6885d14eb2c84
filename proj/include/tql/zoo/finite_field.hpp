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

#ifndef TQL_ZOO_FINITE_FIELD_HPP
#define TQL_ZOO_FINITE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace tql {

/// Decomposes q = p^f; nullopt when q is not a prime power (or q < 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// GF(p^f). An element is encoded as the integer sum c_i p^i of its
/// coefficient vector in the polynomial basis, so 0 and 1 are the field's
/// zero and one and GF(p) sits inside as 0..p-1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Uses the smallest monic irreducible modulus of degree f, ordered by
  /// the same integer encoding (constant term least significant).
  FiniteField(std::uint32_t p, std::uint32_t f);
  /// Uses the given monic modulus (coefficients, constant term first, of
  /// length f+1); throws UsageError if it is not irreducible.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  static FiniteField of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// The smallest element (in encoding order) of multiplicative order q-1.
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  std::uint32_t log(Elem a) const { return log_[a]; }

  /// Monic irreducible test by trial division by every monic polynomial of
  /// degree at most deg/2.
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

 private:
  void build_tables();
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 0, f_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace tql

#endif  // TQL_ZOO_FINITE_FIELD_HPP
