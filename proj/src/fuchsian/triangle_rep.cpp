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

#include "tql/fuchsian/triangle_rep.hpp"

namespace tql {

namespace {

using Int = HurwitzInteger::Int;
using Cubic = std::array<Int, 3>;

Cubic mul(const Cubic& a, const Cubic& b) {
  Int p[5];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += a[i] * b[j];
  // eta^3 = 1 + 2 eta - eta^2, eta^4 = -1 - eta + 3 eta^2.
  return {p[0] + p[3] - p[4], p[1] + 2 * p[3] - p[4], p[2] - p[3] + 3 * p[4]};
}

Cubic add(const Cubic& a, const Cubic& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Cubic times_s_squared(const Cubic& a) { return mul(a, Cubic{Int(-1), Int(1), Int(0)}); }

Cubic rational_part(const HurwitzInteger& h) {
  const auto& c = h.coefficients();
  return {c[0], c[1], c[2]};
}

Cubic s_part(const HurwitzInteger& h) {
  const auto& c = h.coefficients();
  return {c[3], c[4], c[5]};
}

HurwitzInteger join(const Cubic& r, const Cubic& s) { return HurwitzInteger({r[0], r[1], r[2], s[0], s[1], s[2]}); }

}  // namespace

HurwitzInteger HurwitzInteger::from_int(std::int64_t v) {
  std::array<Int, 6> c{};
  c[0] = v;
  return HurwitzInteger(c);
}

HurwitzInteger operator+(const HurwitzInteger& a, const HurwitzInteger& b) {
  std::array<Int, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = a.c_[i] + b.c_[i];
  return HurwitzInteger(c);
}

HurwitzInteger operator-(const HurwitzInteger& a, const HurwitzInteger& b) {
  std::array<Int, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = a.c_[i] - b.c_[i];
  return HurwitzInteger(c);
}

HurwitzInteger HurwitzInteger::operator-() const {
  std::array<Int, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = -c_[i];
  return HurwitzInteger(c);
}

HurwitzInteger operator*(const HurwitzInteger& a, const HurwitzInteger& b) {
  // (A + B s)(C + D s) = (AC + BD s^2) + (AD + BC) s.
  const Cubic A = rational_part(a), B = s_part(a), C = rational_part(b), D = s_part(b);
  return join(add(mul(A, C), times_s_squared(mul(B, D))), add(mul(A, D), mul(B, C)));
}

bool HurwitzInteger::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

TriangleWord reduce_word(const TriangleWord& w) {
  TriangleWord out;
  for (Letter l : w) {
    out.push_back(l);
    if (l == Letter::kX && out.size() >= 2 && out[out.size() - 2] == Letter::kX) {
      out.resize(out.size() - 2);
    } else if (l == Letter::kY && out.size() >= 3 && out[out.size() - 2] == Letter::kY &&
               out[out.size() - 3] == Letter::kY) {
      out.resize(out.size() - 3);
    }
  }
  return out;
}

TriangleWord inverse_word(const TriangleWord& w) {
  // x^-1 = x and y^-1 = y y.
  TriangleWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(*it);
    if (*it == Letter::kY) out.push_back(Letter::kY);
  }
  return reduce_word(out);
}

TriangleWord concat(const TriangleWord& a, const TriangleWord& b) {
  TriangleWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(out);
}

std::string word_to_string(const TriangleWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += l == Letter::kX ? 'x' : 'y';
  }
  return out;
}

HurwitzMatrix HurwitzMatrix::identity() {
  return {HurwitzInteger::from_int(1), HurwitzInteger(), HurwitzInteger(), HurwitzInteger::from_int(1)};
}

HurwitzMatrix HurwitzMatrix::of(Letter l) {
  if (l == Letter::kX) return {HurwitzInteger(), HurwitzInteger::from_int(1), HurwitzInteger::from_int(-1), HurwitzInteger()};
  // mu = 2cos(pi/7) = eta^2 + eta - 1, and mu^2 - 3 = s^2.
  const HurwitzInteger mu({Int(-1), Int(1), Int(1), Int(0), Int(0), Int(0)});
  const HurwitzInteger s({Int(0), Int(0), Int(0), Int(1), Int(0), Int(0)});
  return {HurwitzInteger::from_int(1), s - mu, s + mu, HurwitzInteger::from_int(1)};
}

HurwitzMatrix HurwitzMatrix::of(const TriangleWord& w) {
  HurwitzMatrix m = identity();
  for (Letter l : w) m = m * of(l);
  return m;
}

HurwitzMatrix operator*(const HurwitzMatrix& p, const HurwitzMatrix& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

HurwitzInteger HurwitzMatrix::trace_of_product(const HurwitzMatrix& p, const HurwitzMatrix& q) {
  return p.a * q.a + p.b * q.c + p.c * q.b + p.d * q.d;
}

bool HurwitzMatrix::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

bool is_trivial_in_triangle_group(const TriangleWord& w) { return HurwitzMatrix::of(w).is_scalar(); }

bool is_triangle_involution(const TriangleWord& w) {
  HurwitzMatrix m = HurwitzMatrix::of(w);
  return m.trace().is_zero() && !m.is_scalar();
}

}  // namespace tql
