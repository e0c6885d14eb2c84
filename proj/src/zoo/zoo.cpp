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

#include "tql/zoo/zoo.hpp"

#include <numeric>

#include "tql/error.hpp"

namespace tql {

namespace {

using Elem = FiniteField::Elem;

/// Permutation of the projective line from a map on field elements; `at_inf`
/// is the image of infinity and `to_inf` the element sent to infinity (or q
/// when infinity is fixed).
template <typename F>
Permutation projective_map(const FiniteField& k, F&& affine, Point at_inf, Point to_inf) {
  const Point q = k.size();
  std::vector<Point> img(q + 1);
  for (Point x = 0; x < q; ++x) img[x] = x == to_inf ? q : affine(x);
  img[q] = at_inf;
  return Permutation(std::move(img));
}

std::vector<Permutation> projective_generators(const FiniteField& k, Elem scale) {
  const Point q = k.size();
  Permutation translate = projective_map(k, [&](Elem x) { return k.add(x, 1); }, q, q);
  Permutation dilate = projective_map(k, [&](Elem x) { return k.mul(scale, x); }, q, q);
  // x -> -1/x swaps 0 and infinity.
  Permutation invert = projective_map(k, [&](Elem x) { return k.neg(k.inv(x)); }, 0, 0);
  return {translate, dilate, invert};
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

}  // namespace

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

GroupHandle make_psl2(const FiniteField& k) {
  const std::uint64_t q = k.size();
  if (q < 4) throw UsageError("PSL2(q) needs q >= 4");
  GroupMetadata meta;
  meta.known_order = q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
  meta.aut_order = q * (q * q - 1) * k.degree();
  meta.name = "PSL2(" + std::to_string(q) + ")";
  meta.declared_simple = true;
  return build_group(q + 1, projective_generators(k, k.mul(k.primitive(), k.primitive())), meta);
}

GroupHandle make_psl2(std::uint64_t q) {
  if (!prime_power(q) || q < 4) throw UsageError("PSL2(q) needs a prime power q >= 4, got " + std::to_string(q));
  return make_psl2(FiniteField::of_order(q));
}

GroupHandle make_pgl2(const FiniteField& k) {
  const std::uint64_t q = k.size();
  GroupMetadata meta;
  meta.known_order = q * (q * q - 1);
  meta.aut_order = q * (q * q - 1) * k.degree();
  meta.name = "PGL2(" + std::to_string(q) + ")";
  return build_group(q + 1, projective_generators(k, k.primitive()), meta);
}

GroupHandle make_pgl2(std::uint64_t q) {
  if (!prime_power(q)) throw UsageError("PGL2(q) needs a prime power q, got " + std::to_string(q));
  return make_pgl2(FiniteField::of_order(q));
}

GroupHandle make_standard(StandardFamily family, std::uint64_t n) {
  if (n == 0) throw UsageError("n must be positive");
  if (n > 1u << 16) throw CapExceeded("degree " + std::to_string(n) + " exceeds the supported limit");
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  auto cycle = [&](std::vector<Point> pts) { return Permutation::from_cycles(n, {std::move(pts)}); };
  GroupMetadata meta;
  std::vector<Permutation> gens;
  std::size_t degree = n;
  switch (family) {
    case StandardFamily::kSymmetric:
      if (n >= 2) gens = {cycle({0, 1}), cycle(all)};
      meta.known_order = factorial(n);
      meta.aut_order = n == 6 ? 1440 : n == 2 ? 1 : factorial(n);
      meta.name = "S" + std::to_string(n);
      meta.declared_simple = n == 2;
      break;
    case StandardFamily::kAlternating:
      if (n >= 3) {
        gens.push_back(cycle({0, 1, 2}));
        if (n % 2 == 1) {
          gens.push_back(cycle(all));
        } else if (n > 3) {
          gens.push_back(cycle(std::vector<Point>(all.begin() + 1, all.end())));
        }
      }
      meta.known_order = n < 2 ? 1 : factorial(n) / 2;
      meta.aut_order = n == 6 ? 1440 : n >= 4 ? factorial(n) : n == 3 ? 2 : 1;
      meta.name = "A" + std::to_string(n);
      meta.declared_simple = n == 3 || n >= 5;
      break;
    case StandardFamily::kDihedral:
      if (n == 1) {
        degree = 2;
        gens = {Permutation::from_cycles(2, {{0, 1}})};
        meta.aut_order = 1;
      } else if (n == 2) {
        degree = 4;
        gens = {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
        meta.aut_order = 6;
      } else {
        std::vector<std::vector<Point>> refl;
        for (Point i = 1; i < n - i; ++i) refl.push_back({i, static_cast<Point>(n - i)});
        gens = {cycle(all), Permutation::from_cycles(n, refl)};
        meta.aut_order = n * totient(n);
      }
      meta.known_order = 2 * n;
      meta.name = "D" + std::to_string(n);
      meta.declared_simple = n == 1;
      break;
    case StandardFamily::kCyclic:
      if (n >= 2) gens = {cycle(all)};
      meta.known_order = n;
      meta.aut_order = totient(n);
      meta.name = "C" + std::to_string(n);
      meta.declared_simple = is_prime(n);
      break;
  }
  return build_group(degree, std::move(gens), meta);
}

GroupHandle direct_product(const GroupHandle& g, const GroupHandle& h) {
  const std::size_t dg = g.degree(), dh = h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(dg + dh);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < dg; ++i) img[i] = s[i];
    gens.emplace_back(std::move(img));
  }
  for (const auto& s : h.generators()) {
    std::vector<Point> img(dg + dh);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < dh; ++i) img[dg + i] = static_cast<Point>(dg + s[i]);
    gens.emplace_back(std::move(img));
  }
  GroupMetadata meta;
  meta.known_order = checked_mul(g.order(), h.order());
  meta.name = g.name() + " x " + h.name();
  const auto& mg = g.metadata();
  const auto& mh = h.metadata();
  if (g.is_trivial() && mh.aut_order) {
    meta.aut_order = mh.aut_order;
  } else if (h.is_trivial() && mg.aut_order) {
    meta.aut_order = mg.aut_order;
  } else if (mg.declared_simple && mh.declared_simple && g.order() != h.order() && mg.aut_order &&
             mh.aut_order) {
    meta.aut_order = checked_mul(*mg.aut_order, *mh.aut_order);
  }
  return build_group(dg + dh, std::move(gens), meta);
}

}  // namespace tql
