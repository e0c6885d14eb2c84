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

#ifndef TQL_ZOO_ZOO_HPP
#define TQL_ZOO_ZOO_HPP

#include <cstdint>
#include <string_view>

#include "tql/perm/group.hpp"
#include "tql/zoo/finite_field.hpp"

namespace tql {

/// PSL2(q) on the projective line: field elements are points 0..q-1 in
/// FiniteField encoding and infinity is point q. Generated by x -> x+1,
/// x -> a*x with a the square of the primitive element, and x -> -1/x.
/// Throws UsageError unless q is a prime power >= 4.
GroupHandle make_psl2(std::uint64_t q);
GroupHandle make_psl2(const FiniteField& field);

/// PGL2(q), with x -> z*x for z primitive in place of the square. q >= 2.
GroupHandle make_pgl2(std::uint64_t q);
GroupHandle make_pgl2(const FiniteField& field);

enum class StandardFamily { kSymmetric, kAlternating, kDihedral, kCyclic };

/// Natural actions: S_n and A_n on n points, D_n (order 2n) on the n-gon's
/// vertices (D_1 on 2 points, D_2 regular on 4), C_n regular on n points.
GroupHandle make_standard(StandardFamily family, std::uint64_t n);

/// G x H on the disjoint union of the point sets, G's points first. The
/// automorphism group order is recorded only when both factors are declared
/// simple with different orders (or one factor is trivial).
GroupHandle direct_product(const GroupHandle& g, const GroupHandle& h);

/// Euler's totient.
std::uint64_t totient(std::uint64_t n);

}  // namespace tql

#endif  // TQL_ZOO_ZOO_HPP
