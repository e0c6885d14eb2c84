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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "tql/error.hpp"
#include "tql/fuchsian/rational.hpp"
#include "tql/fuchsian/signature.hpp"
#include "tql/fuchsian/smith.hpp"
#include "tql/fuchsian/triangle_rep.hpp"
#include "tql/perm/enumerate.hpp"
#include "tql/perm/subgroup.hpp"
#include "tql/zoo/zoo.hpp"

namespace tql {
namespace {

Signature sig(const char* s) { return parse_signature(s); }

// chi over the common denominator prod(m_i), by integer arithmetic only.
std::pair<std::int64_t, std::int64_t> chi_oracle(std::int64_t h, const std::vector<std::int64_t>& ms) {
  std::int64_t den = 1;
  for (auto m : ms) den *= m;
  std::int64_t num = (2 - 2 * h) * den;
  for (auto m : ms) num -= den - den / m;
  std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(-1, 42), Rational(0));
  EXPECT_EQ(Rational(-3, 14).to_string(), "-3/14");
  EXPECT_THROW(Rational(1, 0), UsageError);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(4), OverflowError);
}

TEST(Signature, ParseAndFormat) {
  EXPECT_EQ(sig("(0;7,3,2)").to_string(), "(0;2,3,7)");
  EXPECT_EQ(sig(" ( 0 ; 2, 2 ,2,3 ) ").periods, (std::vector<std::int64_t>{2, 2, 2, 3}));
  EXPECT_EQ(sig("(1;)").to_string(), "(1;)");
  EXPECT_THROW(sig("(0;1,3)"), UsageError);
  EXPECT_THROW(sig("0;2,3,7"), UsageError);
  EXPECT_THROW(sig("(0;2,,3)"), UsageError);
  EXPECT_THROW(sig("(0;2,3,)"), UsageError);
}

TEST(Signature, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic(sig("(0;2,3,7)")), Rational(-1, 42));
  EXPECT_EQ(euler_characteristic(sig("(0;)")), Rational(2));
  EXPECT_EQ(euler_characteristic(sig("(0;2,2,2,3)")), Rational(-1, 6));
  for (const char* s : {"(0;2,3,7)", "(0;2,2,2,3)", "(2;3,5)", "(0;7,7,7)", "(1;2)", "(3;)"}) {
    auto x = sig(s);
    auto [n, d] = chi_oracle(x.genus, x.periods);
    EXPECT_EQ(euler_characteristic(x), Rational(n, d)) << s;
  }
}

TEST(Signature, SubgroupIndex) {
  EXPECT_EQ(subgroup_index(sig("(0;7,7,7)"), sig("(0;2,3,7)")), 24);
  EXPECT_EQ(subgroup_index(sig("(0;2,2,2,3)"), sig("(0;2,3,7)")), 7);
  EXPECT_EQ(subgroup_index(sig("(0;2,3,7)"), sig("(0;2,3,7)")), 1);
  EXPECT_THROW(subgroup_index(sig("(0;2,3,8)"), sig("(0;2,3,7)")), UsageError);
  EXPECT_THROW(subgroup_index(sig("(0;2,3,5)"), sig("(0;2,3,7)")), UsageError);
}

TEST(Signature, SurfaceGenus) {
  auto t = sig("(0;2,3,7)");
  EXPECT_EQ(surface_genus_from_order(168, t), 3);
  EXPECT_EQ(surface_genus_from_order(504, t), 7);
  EXPECT_EQ(surface_genus_from_order(84672, t), 1009);
  EXPECT_EQ(surface_genus_from_order(9828, t), 118);
  EXPECT_EQ(surface_genus_from_order(336, sig("(0;2,2,2,3)")), 29);
  EXPECT_THROW(surface_genus_from_order(60, t), UsageError);
  for (std::uint64_t n = 84; n <= 84 * 200; n += 84) EXPECT_EQ(surface_genus_from_order(n, t), 1 + static_cast<std::int64_t>(n / 84));
}

TEST(Signature, EnumerateCandidates) {
  auto t = sig("(0;2,3,7)");
  EXPECT_EQ(enumerate_subgroup_signatures(t, 7), std::vector<Signature>{sig("(0;2,2,2,3)")});
  EXPECT_EQ(enumerate_subgroup_signatures(t, 1), std::vector<Signature>{t});
  auto c24 = enumerate_subgroup_signatures(t, 24);
  EXPECT_NE(std::find(c24.begin(), c24.end(), sig("(0;7,7,7)")), c24.end());
  EXPECT_EQ(triangle_subgroup_indices(t, 200), (std::vector<std::int64_t>{8, 9, 16, 24}));
  for (std::int64_t d = 1; d <= 60; ++d)
    for (const auto& s : enumerate_subgroup_signatures(t, d)) {
      EXPECT_EQ(euler_characteristic(s), Rational(d) * euler_characteristic(t));
      for (auto m : s.periods) EXPECT_TRUE(m == 2 || m == 3 || m == 7);
    }
}

// Element-order multiset of (Z_m1 + ... + Z_mr) / <(1,...,1)>, by brute force.
std::map<std::int64_t, std::int64_t> quotient_census(const std::vector<std::int64_t>& ms) {
  std::int64_t total = 1;
  for (auto m : ms) total *= m;
  auto canon = [&](std::vector<std::int64_t> v) {
    // Smallest representative of the coset v + <(1,...,1)>.
    std::vector<std::int64_t> best = v;
    std::int64_t L = 1;
    for (auto m : ms) L = std::lcm(L, m);
    for (std::int64_t k = 0; k < L; ++k) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + 1) % ms[i];
      best = std::min(best, v);
    }
    return best;
  };
  std::map<std::vector<std::int64_t>, bool> seen;
  std::map<std::int64_t, std::int64_t> census;
  std::vector<std::int64_t> v(ms.size(), 0);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      v[i] = c % ms[i];
      c /= ms[i];
    }
    auto key = canon(v);
    if (seen[key]) continue;
    seen[key] = true;
    std::int64_t ord = 1;
    auto w = key;
    auto zero = canon(std::vector<std::int64_t>(ms.size(), 0));
    while (canon(w) != zero) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = (w[i] + key[i]) % ms[i];
      ++ord;
    }
    ++census[ord];
  }
  return census;
}

std::map<std::int64_t, std::int64_t> census_of_factors(const std::vector<std::int64_t>& ds) {
  std::int64_t total = 1;
  for (auto d : ds) total *= d;
  std::map<std::int64_t, std::int64_t> census;
  std::vector<std::int64_t> v(ds.size());
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code, ord = 1;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      std::int64_t x = c % ds[i];
      c /= ds[i];
      ord = std::lcm(ord, ds[i] / std::gcd(ds[i], x));
    }
    ++census[ord];
  }
  return census;
}

TEST(Abelianization, TriangleGroups) {
  EXPECT_EQ(abelianization(sig("(0;7,7,7)")).torsion, (std::vector<std::int64_t>{7, 7}));
  EXPECT_EQ(abelianization(sig("(0;7,7,7)")).free_rank, 0);
  EXPECT_TRUE(abelianization(sig("(0;2,3,7)")).is_trivial());
  EXPECT_EQ(abelianization(sig("(0;3,3,7)")).torsion, std::vector<std::int64_t>{3});
  EXPECT_EQ(abelianization(sig("(0;2,7,7)")).torsion, std::vector<std::int64_t>{7});
  EXPECT_EQ(abelianization(sig("(0;3,7,7)")).torsion, std::vector<std::int64_t>{7});
  EXPECT_EQ(abelianization(sig("(1;)")).free_rank, 2);
  EXPECT_EQ(abelianization(sig("(0;7,7,7)")).to_string(), "Z7 x Z7");
}

TEST(Abelianization, MatchesBruteForceQuotient) {
  for (const char* s : {"(0;7,7,7)", "(0;2,3,7)", "(0;3,3,7)", "(0;2,7,7)", "(0;2,2,2,3)", "(0;4,6,10)",
                        "(0;2,2,2,2)", "(0;6,6)", "(0;3,9,27)"}) {
    auto x = sig(s);
    auto a = abelianization(x);
    ASSERT_EQ(a.free_rank, 0) << s;
    EXPECT_EQ(census_of_factors(a.torsion.empty() ? std::vector<std::int64_t>{1} : a.torsion),
              quotient_census(x.periods))
        << s;
  }
}

TEST(Abelianization, SmithSelfCheck) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> ms;
    std::size_t r = 1 + rng() % 5;
    for (std::size_t i = 0; i < r; ++i) ms.push_back(2 + static_cast<std::int64_t>(rng() % 30));
    Signature s(0, ms);
    auto inv = smith_invariants(relation_matrix(s));
    std::int64_t prod = 1;
    for (auto d : inv) prod *= d;
    EXPECT_EQ(prod, maximal_minor_gcd(relation_matrix(s))) << s.to_string();
    for (std::size_t i = 0; i + 1 < inv.size(); ++i)
      if (inv[i] != 0) EXPECT_EQ(inv[i + 1] % inv[i], 0);
  }
}

TEST(Smith, GeneralMatrices) {
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<std::int64_t>{2, 6, 12}));
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}), (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(determinant({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), -144);
}

// A (2,3,7) generating triple of PSL2(7) by direct search.
struct Triple {
  Permutation x, y, z;
};

Triple hurwitz_triple(const GroupHandle& g) {
  auto elts = enumerate_elements(g);
  for (const auto& x : elts) {
    if (element_order(x) != 2) continue;
    for (const auto& y : elts)
      if (element_order(y) == 3 && element_order(x * y) == 7 && generates(g, std::vector<Permutation>{x, y}))
        return {x, y, (x * y).inverse()};
  }
  throw std::runtime_error("no triple");
}

Signature preimage(const GroupHandle& g, const Triple& t, const GroupHandle& u) {
  // The coset action is built for G's own generators; evaluate it on x, y, z.
  auto a = coset_action(g, u);
  std::vector<Permutation> images{a.image_of(t.x), a.image_of(t.y), a.image_of(t.z)};
  return subgroup_signature(sig("(0;2,3,7)"), images, static_cast<std::int64_t>(a.degree()));
}

GroupHandle subgroup_of_order(const GroupHandle& g, std::uint64_t order) {
  auto elts = enumerate_elements(g);
  for (const auto& a : elts)
    for (const auto& b : elts)
      if (generated_order(g.degree(), std::vector<Permutation>{a, b}) == order) return subgroup(g, {a, b});
  throw std::runtime_error("no subgroup");
}

TEST(SubgroupSignature, Psl27) {
  auto g = make_psl2(7);
  auto t = hurwitz_triple(g);
  EXPECT_EQ(preimage(g, t, subgroup_of_order(g, 24)), sig("(0;2,2,2,3)"));
  EXPECT_EQ(preimage(g, t, subgroup_of_order(g, 7)), sig("(0;7,7,7)"));
  EXPECT_EQ(preimage(g, t, subgroup_of_order(g, 21)), sig("(0;3,3,7)"));
  EXPECT_EQ(preimage(g, t, g), sig("(0;2,3,7)"));
  for (std::uint64_t m : {24u, 7u, 21u}) {
    auto u = subgroup_of_order(g, m);
    auto s = preimage(g, t, u);
    EXPECT_EQ(euler_characteristic(s), Rational(static_cast<std::int64_t>(168 / m)) * Rational(-1, 42));
  }
}

TEST(SubgroupSignature, Psl28Borel) {
  auto g = make_psl2(8);
  auto t = hurwitz_triple(g);
  // x -> x+1 and x -> a x fix infinity: the order-56 Borel subgroup.
  auto u = subgroup(g, {g.generators()[0], g.generators()[1]});
  ASSERT_EQ(u.order(), 56u);
  auto s = preimage(g, t, u);
  EXPECT_EQ(euler_characteristic(s), Rational(9) * Rational(-1, 42));
  EXPECT_EQ(s, sig("(0;2,7,7)"));
}

TEST(SubgroupSignature, RejectsBadInput) {
  auto t = sig("(0;2,3,7)");
  std::vector<Permutation> bad{Permutation::from_cycles(3, {{0, 1}}), Permutation(3), Permutation(3)};
  EXPECT_THROW(subgroup_signature(t, bad, 3), UsageError);
  std::vector<Permutation> wrong_order{Permutation::from_cycles(3, {{0, 1, 2}}), Permutation(3),
                                       Permutation::from_cycles(3, {{0, 2, 1}})};
  EXPECT_THROW(subgroup_signature(t, wrong_order, 3), UsageError);
}

// Floating point image of a word under the real embedding eta = 2cos(2pi/7),
// s = sqrt(eta - 1), scaled like the exact matrices.
std::array<double, 4> numeric_matrix(const TriangleWord& w) {
  const double pi = std::acos(-1.0);
  const double mu = 2 * std::cos(pi / 7), s = std::sqrt(2 * std::cos(2 * pi / 7) - 1);
  std::array<double, 4> m{1, 0, 0, 1};
  for (Letter l : w) {
    std::array<double, 4> g = l == Letter::kX ? std::array<double, 4>{0, 1, -1, 0}
                                               : std::array<double, 4>{1, s - mu, s + mu, 1};
    m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
  }
  return m;
}

double embed(const HurwitzInteger& h) {
  const double pi = std::acos(-1.0);
  const double eta = 2 * std::cos(2 * pi / 7), s = std::sqrt(eta - 1);
  const auto& c = h.coefficients();
  double r = 0;
  for (int i = 0; i < 3; ++i) r += (c[i].convert_to<double>() + s * c[i + 3].convert_to<double>()) * std::pow(eta, i);
  return r;
}

TriangleWord parse_word(const std::string& text) {
  TriangleWord w;
  for (char ch : text) w.push_back(ch == 'x' ? Letter::kX : Letter::kY);
  return w;
}

TEST(TriangleRep, RelatorsAreTrivialAndShortWordsAreNot) {
  EXPECT_TRUE(is_trivial_in_triangle_group(parse_word("xx")));
  EXPECT_TRUE(is_trivial_in_triangle_group(parse_word("yyy")));
  EXPECT_TRUE(is_trivial_in_triangle_group(parse_word("xyxyxyxyxyxyxy")));
  EXPECT_TRUE(is_trivial_in_triangle_group(parse_word("yxyxyxyxyxyxyx")));
  EXPECT_FALSE(is_trivial_in_triangle_group(parse_word("xyxyxyxyxyxy")));
  EXPECT_FALSE(is_trivial_in_triangle_group(parse_word("xy")));
  EXPECT_FALSE(is_trivial_in_triangle_group(parse_word("xyxyyxyy")));
  EXPECT_TRUE(is_triangle_involution(parse_word("x")));
  EXPECT_TRUE(is_triangle_involution(parse_word("yxyy")));
  EXPECT_FALSE(is_triangle_involution(parse_word("y")));
  EXPECT_FALSE(is_triangle_involution(parse_word("xx")));
}

TEST(TriangleRep, ExactMatchesFloatingPointEmbedding) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    TriangleWord w;
    const int len = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < len; ++i) w.push_back(rng() % 2 ? Letter::kX : Letter::kY);
    auto exact = HurwitzMatrix::of(w);
    auto approx = numeric_matrix(w);
    const double scale = std::max(1.0, std::abs(approx[0]) + std::abs(approx[1]) + std::abs(approx[2]) + std::abs(approx[3]));
    EXPECT_NEAR(embed(exact.a), approx[0], 1e-9 * scale);
    EXPECT_NEAR(embed(exact.b), approx[1], 1e-9 * scale);
    EXPECT_NEAR(embed(exact.c), approx[2], 1e-9 * scale);
    EXPECT_NEAR(embed(exact.d), approx[3], 1e-9 * scale);
  }
  // tr(x y) = 2cos(pi/7), scaled by 2 for the single y.
  EXPECT_NEAR(embed(HurwitzMatrix::of(parse_word("xy")).trace()) / 2, 2 * std::cos(std::acos(-1.0) / 7), 1e-12);
}

TEST(TriangleRep, WordNormalForm) {
  EXPECT_EQ(word_to_string(reduce_word(parse_word("xxyyyx"))), "x");
  EXPECT_EQ(word_to_string(reduce_word(parse_word("yxxyy"))), "1");
  EXPECT_EQ(word_to_string(inverse_word(parse_word("xy"))), "y y x");
  auto w = parse_word("xyyxyxy");
  EXPECT_TRUE(concat(w, inverse_word(w)).empty());
}

}  // namespace
}  // namespace tql
