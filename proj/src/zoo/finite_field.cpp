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

#include "tql/zoo/finite_field.hpp"

#include "tql/error.hpp"

namespace tql {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

using Poly = std::vector<std::uint32_t>;

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t n) {
  Poly d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return static_cast<std::uint32_t>(v);
}

/// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      std::uint32_t& t = a[i - dm + j];
      t = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(p - c) * m[j]) % p);
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  std::uint32_t f = 0;
  while (q > 1) {
    q /= ps[0];
    ++f;
  }
  return std::pair{static_cast<std::uint32_t>(ps[0]), f};
}

bool FiniteField::is_irreducible(std::uint32_t p, const Poly& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t d = poly.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = digits(code, p, static_cast<std::uint32_t>(k));
      g.push_back(1);
      Poly r = poly_mod(poly, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
  if (!is_prime(p) || f == 0) throw UsageError("field characteristic must be prime and degree positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) q *= p;
  if (q > kMaxFieldOrder) throw CapExceeded("field order " + std::to_string(q) + " exceeds the supported limit");
  q_ = static_cast<std::uint32_t>(q);
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly m = digits(code, p, f);
    m.push_back(1);
    if (f == 1 || is_irreducible(p, m)) {
      modulus_ = std::move(m);
      break;
    }
  }
  build_tables();
}

FiniteField::FiniteField(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw UsageError("field characteristic must be prime");
  if (!is_irreducible(p, modulus_)) throw UsageError("modulus is not monic irreducible");
  f_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f_; ++i) q *= p;
  if (q > kMaxFieldOrder) throw CapExceeded("field order " + std::to_string(q) + " exceeds the supported limit");
  q_ = static_cast<std::uint32_t>(q);
  build_tables();
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  auto pf = prime_power(q);
  if (!pf) throw UsageError(std::to_string(q) + " is not a prime power");
  return FiniteField(pf->first, pf->second);
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
  Poly x = digits(a, p_, f_), y = digits(b, p_, f_);
  Poly prod(2 * f_ - 1, 0);
  for (std::uint32_t i = 0; i < f_; ++i)
    for (std::uint32_t j = 0; j < f_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
  Poly r = f_ == 1 ? Poly{prod[0] % p_} : poly_mod(std::move(prod), modulus_, p_);
  r.resize(f_, 0);
  return encode(r, p_);
}

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  auto factors = prime_factors(n);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem acc = 1;
    while (e) {
      if (e & 1u) acc = slow_mul(acc, a);
      a = slow_mul(a, a);
      e >>= 1u;
    }
    return acc;
  };
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors) primitive = primitive && slow_pow(g, n / r) != 1;
    if (primitive) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw DataIntegrityError("no primitive element found");
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, primitive_);
  }
  if (x != 1) throw DataIntegrityError("primitive element check failed");
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw UsageError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

}  // namespace tql
