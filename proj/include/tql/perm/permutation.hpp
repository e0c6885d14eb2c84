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

#ifndef TQL_PERM_PERMUTATION_HPP
#define TQL_PERM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tql {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products read left to right: `(p * q)(i) == q(p(i))`, i.e. apply `p`
/// first. Every module uses this convention, so a homomorphism from a
/// finitely presented group sends the word `a b c` to `A * B * C`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image array; throws UsageError if it is not a
  /// bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point apply(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  const Point* data() const { return images_.data(); }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;

  /// `g^-1 * this * g`.
  Permutation conjugate_by(const Permutation& g) const;

  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const;
  bool is_even() const;

  /// Nontrivial cycles (length >= 2), each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Lengths of all cycles including fixed points, ascending.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Product with the left-to-right convention; throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Least common multiple of the cycle lengths.
std::uint64_t element_order(const Permutation& p);

/// Commutator `a^-1 b^-1 a b`.
Permutation commutator(const Permutation& a, const Permutation& b);

/// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

/// Parses 1-based cycle notation; whitespace between and inside cycles is
/// ignored. Throws UsageError on malformed input or out-of-range points.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace tql

#endif  // TQL_PERM_PERMUTATION_HPP
