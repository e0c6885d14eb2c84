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

#ifndef TQL_FUCHSIAN_TRIANGLE_REP_HPP
#define TQL_FUCHSIAN_TRIANGLE_REP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tql {

/// Exact integers of Q(eta, s) with eta = 2cos(2 pi/7) (eta^3 = -eta^2 +
/// 2 eta + 1) and s^2 = eta - 1: c[0..2] + s c[3..5] in the basis
/// 1, eta, eta^2.
class HurwitzInteger {
 public:
  using Int = boost::multiprecision::cpp_int;

  HurwitzInteger() = default;
  explicit HurwitzInteger(std::array<Int, 6> c) : c_(std::move(c)) {}
  static HurwitzInteger from_int(std::int64_t v);

  friend HurwitzInteger operator+(const HurwitzInteger& a, const HurwitzInteger& b);
  friend HurwitzInteger operator-(const HurwitzInteger& a, const HurwitzInteger& b);
  friend HurwitzInteger operator*(const HurwitzInteger& a, const HurwitzInteger& b);
  HurwitzInteger operator-() const;
  friend bool operator==(const HurwitzInteger&, const HurwitzInteger&) = default;

  bool is_zero() const;
  const std::array<Int, 6>& coefficients() const { return c_; }

 private:
  std::array<Int, 6> c_{};
};

/// Words in the generators x, y of the (2,3,7) triangle group.
enum class Letter : std::uint8_t { kX, kY };
using TriangleWord = std::vector<Letter>;

/// Normal form modulo x^2 and y^3 (the free product Z2 * Z3).
TriangleWord reduce_word(const TriangleWord& w);
TriangleWord inverse_word(const TriangleWord& w);
TriangleWord concat(const TriangleWord& a, const TriangleWord& b);
/// "x y y x", or "1" for the empty word.
std::string word_to_string(const TriangleWord& w);

/// 2x2 matrix over HurwitzInteger. x maps to [[0,1],[-1,0]] and y to half
/// of [[1, s - mu], [s + mu, 1]] with mu = 2cos(pi/7); the traces (0, 1, mu)
/// make this the Fuchsian, hence faithful, representation of (2,3,7) in
/// SL2(R). Matrices are kept scaled by 2^(number of y letters).
struct HurwitzMatrix {
  HurwitzInteger a, b, c, d;

  static HurwitzMatrix identity();
  static HurwitzMatrix of(Letter l);
  static HurwitzMatrix of(const TriangleWord& w);

  friend HurwitzMatrix operator*(const HurwitzMatrix& p, const HurwitzMatrix& q);
  HurwitzInteger trace() const { return a + d; }
  /// Trace of p * q without forming the product.
  static HurwitzInteger trace_of_product(const HurwitzMatrix& p, const HurwitzMatrix& q);
  /// A scalar matrix, i.e. the identity of the triangle group.
  bool is_scalar() const;
};

/// w = 1 in the triangle group, decided exactly.
bool is_trivial_in_triangle_group(const TriangleWord& w);
/// w has order exactly 2 in the triangle group (trace zero, not trivial).
bool is_triangle_involution(const TriangleWord& w);

}  // namespace tql

#endif  // TQL_FUCHSIAN_TRIANGLE_REP_HPP
