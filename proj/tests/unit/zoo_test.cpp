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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "tql/error.hpp"
#include "tql/perm/enumerate.hpp"
#include "tql/perm/subgroup.hpp"
#include "tql/zoo/generator_file.hpp"
#include "tql/zoo/group_spec.hpp"

namespace tql {
namespace {

std::map<std::uint64_t, std::size_t> order_census(const GroupHandle& g) {
  std::map<std::uint64_t, std::size_t> m;
  for_each_element(g, [&](const Permutation& p) { ++m[element_order(p)]; });
  return m;
}

TEST(FiniteField, SmallestModulus) {
  // x^3, x^3+1 and x^3+x all have a root over GF(2); x^3+x+1 does not.
  FiniteField f8(2, 3);
  EXPECT_EQ(f8.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  // x^2+1 is irreducible over GF(3) (-1 is not a square mod 3).
  FiniteField f9(3, 2);
  EXPECT_EQ(f9.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, Axioms) {
  for (std::uint64_t q : {7u, 8u, 9u, 25u, 27u}) {
    auto k = FiniteField::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(k.add(a, k.neg(a)), 0u);
      if (a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(k.add(a, b), k.add(b, a));
        for (std::uint32_t c = 0; c < q; c += 3) EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
      }
    }
  }
}

TEST(FiniteField, PrimitiveElementHasFullOrder) {
  for (std::uint64_t q : {8u, 13u, 27u, 49u}) {
    auto k = FiniteField::of_order(q);
    std::set<std::uint32_t> powers;
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      powers.insert(x);
      x = k.mul(x, k.primitive());
    }
    EXPECT_EQ(powers.size(), q - 1);
  }
}

TEST(FiniteField, RejectsReducibleModulus) {
  EXPECT_THROW(FiniteField(2, std::vector<std::uint32_t>{1, 0, 0, 1}), UsageError);
  EXPECT_THROW(FiniteField::of_order(12), UsageError);
}

TEST(Zoo, Psl2Orders) {
  auto g7 = make_psl2(7);
  EXPECT_EQ(g7.degree(), 8u);
  EXPECT_EQ(g7.order(), 168u);
  auto g8 = make_psl2(8);
  EXPECT_EQ(g8.degree(), 9u);
  EXPECT_EQ(g8.order(), 504u);
  for (std::uint64_t q : {4u, 5u, 9u, 11u, 13u, 16u, 25u, 27u, 49u}) {
    auto g = make_psl2(q);
    std::uint64_t expected = q * (q * q - 1) / (q % 2 ? 2 : 1);
    EXPECT_EQ(g.order(), expected) << q;
    EXPECT_EQ(*g.metadata().aut_order, q * (q * q - 1) * prime_power(q)->second);
  }
  EXPECT_EQ(make_psl2(27).degree(), 28u);
  EXPECT_EQ(make_psl2(27).order(), 9828u);
}

TEST(Zoo, Psl2RejectsBadQ) {
  EXPECT_THROW(make_psl2(6), UsageError);
  EXPECT_THROW(make_psl2(3), UsageError);
}

TEST(Zoo, Pgl2) {
  EXPECT_EQ(make_pgl2(7).order(), 2 * make_psl2(7).order());
  EXPECT_EQ(make_pgl2(3).order(), 24u);
  EXPECT_EQ(make_standard(StandardFamily::kSymmetric, 4).order(), make_pgl2(3).order());
  auto pgl = make_pgl2(7);
  auto psl = make_psl2(7);
  for (const auto& s : psl.generators()) EXPECT_TRUE(pgl.contains(s));
  EXPECT_EQ(make_pgl2(8).order(), 504u);
}

TEST(Zoo, Psl2IsPerfect) {
  for (std::uint64_t q : {7u, 8u, 13u, 27u, 49u}) EXPECT_TRUE(is_perfect(make_psl2(q))) << q;
}

TEST(Zoo, Psl2IndependentOfModulus) {
  // Second-smallest irreducible cubics: x^3+x^2+1 over GF(2), x^3+2x+2 over GF(3).
  FiniteField a(2, std::vector<std::uint32_t>{1, 0, 1, 1});
  FiniteField b(3, std::vector<std::uint32_t>{2, 2, 0, 1});
  ASSERT_NE(a.modulus(), FiniteField(2, 3).modulus());
  ASSERT_NE(b.modulus(), FiniteField(3, 3).modulus());
  auto g1 = make_psl2(a), g2 = make_psl2(8);
  EXPECT_EQ(g1.order(), g2.order());
  EXPECT_EQ(order_census(g1), order_census(g2));
  auto h1 = make_psl2(b), h2 = make_psl2(27);
  EXPECT_EQ(h1.order(), h2.order());
  EXPECT_EQ(order_census(h1), order_census(h2));
}

TEST(Zoo, Pgl2SharplyThreeTransitive) {
  for (std::uint64_t q : {5u, 7u, 8u}) {
    auto g = make_pgl2(q);
    using Triple = std::array<Point, 3>;
    std::set<Triple> seen{{0, 1, 2}};
    std::vector<Triple> queue{{0, 1, 2}};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : g.generators()) {
        Triple t{s[queue[i][0]], s[queue[i][1]], s[queue[i][2]]};
        if (seen.insert(t).second) queue.push_back(t);
      }
    EXPECT_EQ(seen.size(), (q + 1) * q * (q - 1));
    EXPECT_EQ(seen.size(), g.order());
  }
}

TEST(Zoo, StandardFamilies) {
  EXPECT_EQ(make_standard(StandardFamily::kDihedral, 6).order(), 12u);
  EXPECT_EQ(make_standard(StandardFamily::kSymmetric, 4).order(), 24u);
  EXPECT_EQ(make_standard(StandardFamily::kAlternating, 9).order(), 181440u);
  EXPECT_EQ(make_standard(StandardFamily::kAlternating, 5).order(), 60u);
  EXPECT_EQ(make_standard(StandardFamily::kAlternating, 8).order(), 20160u);
  EXPECT_EQ(make_standard(StandardFamily::kCyclic, 6).order(), 6u);
  EXPECT_EQ(make_standard(StandardFamily::kCyclic, 1).order(), 1u);
  EXPECT_EQ(make_standard(StandardFamily::kDihedral, 1).order(), 2u);
  EXPECT_EQ(make_standard(StandardFamily::kDihedral, 2).order(), 4u);
  for (std::uint64_t n = 1; n <= 7; ++n) {
    auto s = make_standard(StandardFamily::kSymmetric, n);
    auto a = make_standard(StandardFamily::kAlternating, n);
    EXPECT_EQ(s.order(), n == 1 ? 1 : 2 * a.order());
  }
}

TEST(Zoo, DirectProducts) {
  auto p = direct_product(make_psl2(7), make_psl2(8));
  EXPECT_EQ(p.degree(), 17u);
  EXPECT_EQ(p.order(), 84672u);
  EXPECT_EQ(*p.metadata().aut_order, 336u * 1512u);

  auto trivial = make_standard(StandardFamily::kCyclic, 1);
  EXPECT_EQ(direct_product(make_psl2(7), trivial).order(), 168u);

  auto sq = direct_product(make_psl2(7), make_psl2(7));
  EXPECT_FALSE(sq.metadata().aut_order.has_value());

  // S4 x PSL2(8) as a subgroup of the product, S4 found inside PSL2(7).
  auto g7 = make_psl2(7);
  auto elts = enumerate_elements(g7);
  std::vector<Permutation> s4gens;
  for (const auto& a : elts) {
    if (!s4gens.empty()) break;
    for (const auto& b : elts)
      if (generated_order(8, std::vector<Permutation>{a, b}) == 24) {
        s4gens = {a, b};
        break;
      }
  }
  ASSERT_EQ(s4gens.size(), 2u);
  auto s4 = build_group(8, s4gens);
  auto sub = direct_product(s4, make_psl2(8));
  EXPECT_EQ(sub.order(), 12096u);
  for (const auto& s : sub.generators()) EXPECT_TRUE(p.contains(s));
}

TEST(GeneratorFile, RoundTrip) {
  GeneratorFile f;
  f.degree = 5;
  f.generators = {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  f.metadata.known_order = 60;
  f.metadata.aut_order = 120;
  f.metadata.name = "A5";
  auto g = parse_generator_file(format_generator_file(f));
  EXPECT_EQ(g.degree, 5u);
  EXPECT_EQ(g.generators, f.generators);
  EXPECT_EQ(g.metadata.known_order, f.metadata.known_order);
  EXPECT_EQ(g.metadata.aut_order, f.metadata.aut_order);
  EXPECT_EQ(g.metadata.name, "A5");
}

TEST(GeneratorFile, CommentsAndWhitespace) {
  auto f = parse_generator_file("# header\n\ndegree 4  # trailing\n( 1, 2 ) (3,4)\n  (1,2,3)\n");
  EXPECT_EQ(f.degree, 4u);
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(f.generators[0], Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
}

TEST(GeneratorFile, Errors) {
  EXPECT_THROW(parse_generator_file("(1,2)\ndegree 3\n"), DataIntegrityError);
  EXPECT_THROW(parse_generator_file("degree 3\n(1,5)\n"), DataIntegrityError);
  EXPECT_THROW(parse_generator_file("degree x\n"), DataIntegrityError);
  EXPECT_THROW(parse_generator_file("colour 3\n"), DataIntegrityError);
  EXPECT_THROW(parse_generator_file(""), DataIntegrityError);
}

TEST(GeneratorFile, WrongDeclaredOrderIsHardError) {
  auto path = std::filesystem::temp_directory_path() / "tql_bad_order.gens";
  {
    std::ofstream out(path);
    out << "degree 5\norder 61\n(1,2,3)\n(1,2,3,4,5)\n";
  }
  EXPECT_THROW(load_group(path), DataIntegrityError);
  std::filesystem::remove(path);
}

TEST(GeneratorFile, ShippedData) {
  struct Item {
    const char* file;
    std::size_t degree;
    std::uint64_t order;
  };
  for (const Item& it : {Item{"m12", 12, 95040}, Item{"j1", 266, 175560}, Item{"j2", 100, 604800},
                         Item{"sp4_4", 85, 979200}}) {
    auto path = resolve_group_file(it.file);
    if (!std::filesystem::exists(path)) GTEST_SKIP() << "data file missing: " << it.file;
    auto g = load_group(path);
    EXPECT_EQ(g.degree(), it.degree);
    EXPECT_EQ(g.order(), it.order);
    EXPECT_TRUE(g.metadata().aut_order.has_value());
  }
}

TEST(GroupSpec, ParseAndFormat) {
  for (const char* s : {"psl2:7", "pgl2:9", "sym:4", "alt:9", "dih:6", "cyc:5", "prod:psl2:7,psl2:8",
                        "prod:sym:4,prod:cyc:2,cyc:3", "file:m12"})
    EXPECT_EQ(parse_group_spec(s).to_string(), s);
  EXPECT_THROW(parse_group_spec("psl2"), UsageError);
  EXPECT_THROW(parse_group_spec("foo:3"), UsageError);
  EXPECT_THROW(parse_group_spec("psl2:x"), UsageError);
  EXPECT_THROW(parse_group_spec("prod:psl2:7"), UsageError);
  EXPECT_EQ(build_from_spec(parse_group_spec("prod:psl2:7,psl2:8")).order(), 84672u);
  EXPECT_EQ(build_from_spec(parse_group_spec("dih:6")).order(), 12u);
}

}  // namespace
}  // namespace tql
