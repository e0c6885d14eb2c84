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

#include "tql/perm/group.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "tql/error.hpp"
#include "tql/perm/enumerate.hpp"
#include "tql/perm/subgroup.hpp"

namespace tql {
namespace {

// x -> x+1 and x -> -1/x on the projective line over GF(7), infinity = 7.
GroupHandle psl27() {
  return build_group({Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}}),
                      Permutation::from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}})});
}

GroupHandle a5() {
  return build_group({Permutation::from_cycles(5, {{0, 1, 2}}),
                      Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
}

GroupHandle s4() {
  return build_group({Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
}

GroupHandle find_subgroup_brute(const GroupHandle& g, std::uint64_t order) {
  auto elts = enumerate_elements(g);
  for (const auto& a : elts)
    for (const auto& b : elts)
      if (generated_order(g.degree(), std::vector<Permutation>{a, b}) == order) return subgroup(g, {a, b});
  throw std::runtime_error("no subgroup");
}

TEST(Group, Orders) {
  EXPECT_EQ(psl27().order(), 168u);
  EXPECT_EQ(a5().order(), 60u);
  EXPECT_EQ(s4().order(), 24u);
  EXPECT_EQ(build_group({Permutation(5)}).order(), 1u);
}

TEST(Group, OrderMatchesClosureOracle) {
  auto g = psl27();
  EXPECT_EQ(oracle::closure(8, g.generators()).size(), g.order());
  auto h = build_group({Permutation::from_cycles(9, {{0, 1, 2}, {3, 4}}),
                        Permutation::from_cycles(9, {{2, 5, 6, 7, 8}})});
  EXPECT_EQ(oracle::closure(9, h.generators()).size(), h.order());
}

TEST(Group, KnownOrderMismatchIsDataError) {
  GroupMetadata meta;
  meta.known_order = 167;
  EXPECT_THROW(build_group(psl27().generators(), meta), DataIntegrityError);
}

TEST(Group, Membership) {
  auto g = a5();
  for (const auto& s : g.generators()) EXPECT_TRUE(g.contains(s));
  EXPECT_FALSE(g.contains(Permutation::from_cycles(5, {{0, 1}})));

  std::mt19937_64 rng(5);
  auto h = psl27();
  for (int trial = 0; trial < 20; ++trial) {
    Permutation w(8);
    for (int k = 0; k < 20; ++k) w *= h.generators()[rng() % 2];
    EXPECT_TRUE(h.contains(w));
  }
}

TEST(Group, EnumerationCoversGroupOnce) {
  auto g = psl27();
  auto elts = enumerate_elements(g);
  ASSERT_EQ(elts.size(), 168u);
  EXPECT_TRUE(elts.front().is_identity());
  std::set<Permutation> uniq(elts.begin(), elts.end());
  EXPECT_EQ(uniq.size(), 168u);
  auto brute = oracle::closure(8, g.generators());
  EXPECT_EQ(uniq, std::set<Permutation>(brute.begin(), brute.end()));
  for (const auto& e : elts) {
    auto k = element_order(e);
    EXPECT_TRUE(k == 1 || k == 2 || k == 3 || k == 4 || k == 7);
  }
}

TEST(Group, EnumerationIsDeterministicAndBlocksConcatenate) {
  auto g = psl27();
  auto elts = enumerate_elements(g);
  std::vector<Permutation> by_block;
  for (std::size_t b = 0; b < enumeration_block_count(g); ++b)
    for_each_element_in_block(g, b, [&](const Permutation& p) { by_block.push_back(p); });
  EXPECT_EQ(elts, by_block);
  EXPECT_EQ(elts, enumerate_elements(psl27()));
}

TEST(Group, EnumerationCap) {
  EXPECT_THROW(enumerate_elements(psl27(), 100), CapExceeded);
}

TEST(Group, ConjugacyClassesMatchBruteForce) {
  auto g = psl27();
  auto elts = oracle::closure(8, g.generators());

  auto inv = conjugacy_classes(g, 2);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(inv[0].size, oracle::count_of_order(elts, 2));
  EXPECT_EQ(inv[0].size, 21u);

  auto sevens = conjugacy_classes(g, 7);
  std::vector<Permutation> of7;
  for (const auto& e : elts)
    if (oracle::order_by_cycles(e) == 7) of7.push_back(e);
  auto brute = oracle::class_sizes(elts, of7);
  ASSERT_EQ(sevens.size(), brute.size());
  for (const auto& c : sevens) EXPECT_EQ(c.size, 24u);

  auto all = conjugacy_classes(g);
  std::uint64_t total = 0;
  for (const auto& c : all) {
    EXPECT_EQ(g.order() % c.size, 0u);
    total += c.size;
  }
  EXPECT_EQ(total, 168u);
  EXPECT_TRUE(all.front().representative.is_identity());
  EXPECT_EQ(all.front().size, 1u);
}

TEST(Group, DerivedSubgroups) {
  auto g = psl27();
  EXPECT_EQ(derived_subgroup(g).order(), 168u);
  EXPECT_TRUE(is_perfect(g));

  auto s = s4();
  auto d = derived_subgroup(s);
  EXPECT_EQ(d.order(), oracle::derived_order(4, oracle::closure(4, s.generators())));
  EXPECT_EQ(d.order(), 12u);
  for (const auto& n : d.generators())
    for (const auto& h : s.generators()) EXPECT_TRUE(d.contains(n.conjugate_by(h)));

  auto c6 = build_group({Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
  EXPECT_EQ(derived_subgroup(c6).order(), 1u);
}

TEST(Group, CosetActionOnItself) {
  auto g = psl27();
  auto a = coset_action(g, g);
  EXPECT_EQ(a.degree(), 1u);
  EXPECT_EQ(a.image().order(), 1u);
}

TEST(Group, CosetActionOnOctahedralSubgroup) {
  auto g = psl27();
  auto u = find_subgroup_brute(g, 24);
  auto a = coset_action(g, u);
  EXPECT_EQ(a.degree(), 7u);
  EXPECT_EQ(a.degree() * u.order(), g.order());
  EXPECT_EQ(a.image().order(), 168u);
  EXPECT_TRUE(is_transitive(a.degree(), a.image().generators()));
  auto core = core_order(a, u);
  ASSERT_TRUE(core);
  EXPECT_EQ(a.image().order() * *core, g.order());
  // Homomorphism check on random products.
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto x = random_element(g, s);
    auto y = random_element(g, s + 100);
    EXPECT_EQ(a.image_of(x * y), a.image_of(x) * a.image_of(y));
  }
}

TEST(Group, CosetActionRejectsNonSubgroup) {
  auto g = a5();
  auto h = build_group({Permutation::from_cycles(5, {{0, 1}})});
  EXPECT_THROW(coset_action(g, h), UsageError);
}

TEST(Group, RandomElements) {
  auto g = s4();
  std::set<Permutation> seen;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    auto r = random_element(g, s);
    ASSERT_TRUE(g.contains(r));
    seen.insert(r);
  }
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_EQ(random_element(psl27(), 9), random_element(psl27(), 9));
}

TEST(Group, LagrangeSpotCheck) {
  for (const auto& g : {psl27(), a5(), s4()})
    for (std::uint64_t s = 0; s < 1000; ++s) EXPECT_EQ(g.order() % element_order(random_element(g, s)), 0u);
}

TEST(Group, GenerationTest) {
  auto g = psl27();
  EXPECT_TRUE(generates(g, g.generators()));
  EXPECT_FALSE(generates(g, std::vector<Permutation>{g.generators()[0]}));
  auto u = find_subgroup_brute(g, 21);
  EXPECT_FALSE(generates(g, u.generators()));
}

TEST(Group, RandomizedChainAgreesWithDeterministic) {
  auto g = psl27();
  auto c = StabilizerChain::build_to_order(8, g.generators(), 168, 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 168u);
  EXPECT_FALSE(StabilizerChain::build_to_order(8, {&g.generators()[0], 1}, 168, 3));
}

}  // namespace
}  // namespace tql
