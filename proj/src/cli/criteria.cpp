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

#include "tql/cli/criteria.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "tql/episearch/braid.hpp"
#include "tql/episearch/classify.hpp"
#include "tql/episearch/dihedral.hpp"
#include "tql/episearch/induced.hpp"
#include "tql/episearch/subgroups.hpp"
#include "tql/episearch/survey.hpp"
#include "tql/error.hpp"
#include "tql/fuchsian/smith.hpp"
#include "tql/perm/subgroup.hpp"
#include "tql/zoo/group_spec.hpp"
#include "tql/zoo/zoo.hpp"

namespace tql::cli {

namespace {

class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok      " : "FAILED  ") + what);
    failed_ |= !ok;
  }
  void info(const std::string& what) { r_.details.push_back("info    " + what); }
  void skip(const std::string& what) {
    r_.details.push_back("skipped " + what);
    skipped_ = true;
  }
  bool failed() const { return failed_; }
  bool skipped() const { return skipped_; }

 private:
  CriterionResult& r_;
  bool failed_ = false;
  bool skipped_ = false;
};

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "{" + out + "}";
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::set<std::uint64_t> handle_part(const std::set<std::uint64_t>& ns) {
  std::set<std::uint64_t> out;
  for (auto n : ns)
    if (n >= 2 && n <= 5) out.insert(n);
  return out;
}

Signature sig(const char* s) { return parse_signature(s); }

GroupHandle spec_group(const char* spec, const CriterionContext& ctx) {
  return build_from_spec(parse_group_spec(spec), ctx.data_dir);
}

bool data_file_present(const char* name, const CriterionContext& ctx) {
  return std::filesystem::exists(resolve_group_file(name, ctx.data_dir));
}

void psl27(Checks& c, const CriterionContext& ctx) {
  auto g = make_psl2(7);
  auto t = find_triples(g, kHurwitzType, ctx.search);
  c.check(t.class_count == 1u, "Hurwitz class_count = 1 (total " + std::to_string(t.total) + ")");
  auto q = find_quadruples(g, std::nullopt, ctx.search);
  c.check(q.total == 0, "generating (2,2,2,3) quadruples = 0 (got " + std::to_string(q.total) + ")");
  c.check(!inverting_involution_exists(g, 7, ctx.search), "no involution inverts an element of order 7");
}

void psl28(Checks& c, const CriterionContext& ctx) {
  auto g = make_psl2(8);
  auto t = find_triples(g, kHurwitzType, ctx.search);
  c.check(t.class_count == 3u, "Hurwitz class_count = 3 under Aut(G) (computed " + opt_text(t.class_count) +
                                   "; classes under inner automorphisms " + std::to_string(t.inner_class_count) + ")");
  c.check(surface_genus_from_order(g.order(), sig("(0;2,3,7)")) == 7, "genus of the order-504 action = 7");
  bool found = false;
  for (const auto& s : irreducible_subgroups(g, *t.witness)) {
    if (s.subgroup.order() != 56) continue;
    found = s.irreducible;
    c.info("order-56 subgroup, index " + std::to_string(s.index) + ", preimage signature " +
           s.signature.to_string() + (s.signature == sig("(0;2,7,7)") ? "; (0;3,7,7) is not the index-9 signature"
                                                                       : ""));
  }
  c.check(found, "irreducible subgroup of order 56 found");
}

void survey(Checks& c, const CriterionContext& ctx) {
  auto table = hurwitz_survey_psl2(49, ctx.search);
  std::set<std::uint64_t> upto43;
  bool q49 = false;
  for (const auto& row : table.rows) {
    if (row.hurwitz() && row.q <= 43) upto43.insert(row.q);
    if (row.q == 49) q49 = row.hurwitz();
  }
  c.check(upto43 == std::set<std::uint64_t>{7, 8, 13, 27, 29, 41, 43},
          "Hurwitz q <= 43 = {7,8,13,27,29,41,43} (got " + set_text(upto43) + ")");
  c.check(table.consistent(), "every row agrees with the arithmetic criterion");
  c.check(!q49, "PSL2(49) is not Hurwitz");
  for (const auto& row : table.rows)
    if (row.hurwitz())
      c.info("q=" + std::to_string(row.q) + " classes " + opt_text(row.class_count) + " (PGL2 " +
             std::to_string(row.pgl_class_count) + ", inner " + std::to_string(row.inner_class_count) + ") genus " +
             opt_text(row.genus));
}

void genus_table(Checks& c, const CriterionContext&) {
  const auto tri = sig("(0;2,3,7)"), quad = sig("(0;2,2,2,3)");
  for (auto [order, genus] : {std::pair<std::uint64_t, std::int64_t>{168, 3}, {504, 7}, {9828, 118}, {84672, 1009}}) {
    auto g = surface_genus_from_order(order, tri);
    c.check(g == genus, "(0;2,3,7) order " + std::to_string(order) + " -> genus " + std::to_string(g));
  }
  auto g = surface_genus_from_order(336, quad);
  c.check(g == 29, "(0;2,2,2,3) order 336 -> genus " + std::to_string(g));
}

void signature_calculus(Checks& c, const CriterionContext&) {
  auto g = make_psl2(7);
  auto triple = *find_triples(g).witness;
  for (auto [order, expected] : {std::pair<std::uint64_t, const char*>{24, "(0;2,2,2,3)"}, {7, "(0;7,7,7)"},
                                 {21, "(0;3,3,7)"}}) {
    auto subs = find_subgroups_of_order(g, order);
    if (subs.empty()) {
      c.check(false, "subgroup of order " + std::to_string(order) + " found");
      continue;
    }
    for (const auto& u : subs) {
      auto s = preimage_signature(g, triple, u);
      c.check(s == sig(expected), "order-" + std::to_string(order) + " subgroup signature " + s.to_string());
    }
  }
  auto cands = enumerate_subgroup_signatures(sig("(0;2,3,7)"), 7);
  std::string text;
  for (const auto& s : cands) text += (text.empty() ? "" : " ") + s.to_string();
  c.check(cands == std::vector<Signature>{sig("(0;2,2,2,3)")}, "index-7 candidates = {" + text + "}");
  auto idx = triangle_subgroup_indices(sig("(0;2,3,7)"), 24);
  c.check(idx == std::vector<std::int64_t>{8, 9, 16, 24}, "three-period indices up to 24 = {8,9,16,24}");
  for (auto [s, ab] : {std::pair<const char*, const char*>{"(0;7,7,7)", "Z7 x Z7"}, {"(0;2,7,7)", "Z7"},
                       {"(0;3,7,7)", "Z7"}, {"(0;3,3,7)", "Z3"}, {"(0;2,3,7)", "trivial"}}) {
    auto a = abelianization(sig(s)).to_string();
    c.check(a == ab, std::string("abelianization of ") + s + " = " + a);
  }
}

void psl227(Checks& c, const CriterionContext& ctx) {
  auto g = make_psl2(27);
  auto q = find_quadruples(g, std::nullopt, ctx.search);
  auto ns = q.n_set();
  c.check(q.total > 0, "maximal reducible (" + std::to_string(q.total) + " quadruples)");
  c.check(handle_part(ns).empty(), "n_set " + set_text(ns) + " avoids {2,3,4,5}");
  c.check(ns.count(7) > 0, "7 in n_set");
  auto w = inverting_involution_exists(g, 7, ctx.search);
  c.check(w.has_value(), "an involution inverts an element of order 7");
  auto triple = *find_triples(g, kHurwitzType, ctx.search).witness;
  const Permutation z = triple.x * triple.y;
  std::optional<Permutation> t;
  for (const auto& inv : elements_of_order(g, 2))
    if (inv * z * inv == z.inverse()) {
      t = inv;
      break;
    }
  if (!t) {
    c.check(false, "an involution inverts z = xy of the Hurwitz witness");
    return;
  }
  auto quad = g7_quadruple_from_triple(g, triple, *t);
  c.check(quad.n == 7 && validate_quadruple(g, quad), "G7 quadruple from the Hurwitz triple re-validates, n = 7");
}

void s4(Checks& c, const CriterionContext& ctx) {
  auto g = make_standard(StandardFamily::kSymmetric, 4);
  auto q = find_quadruples(g, std::nullopt, ctx.search);
  c.check(q.n_set() == std::set<std::uint64_t>{2, 3, 4}, "n_set = " + set_text(q.n_set()));
  auto b = quadruple_braid_classes(g, 50'000'000, ctx.search);
  c.check(b.orbit_count() == 1, "one class under Aut(S4) and the (2,2,2,3) braid moves (got " +
                                    std::to_string(b.orbit_count()) + ")");
  c.info("ordered quadruples " + std::to_string(q.total) + ", conjugacy classes of ordered tuples " +
         opt_text(q.class_count));
}

void product(Checks& c, const CriterionContext& ctx) {
  auto h = spec_group("prod:psl2:7,psl2:8", ctx);
  auto t = find_triples(h, kHurwitzType, ctx.search);
  c.check(t.class_count == 1u, "Hurwitz class_count = 1 (computed " + opt_text(t.class_count) + ", inner " +
                                   std::to_string(t.inner_class_count) + ")");
  SubgroupSearchOptions so;
  so.seed = ctx.search.seed;
  auto r = theorem1_check(h, *t.witness, so);
  c.check(r.hypothesis_met && r.subgroup_order == 12096, "index-7 subgroup of order 12096 with signature (0;2,2,2,3)");
  c.check(r.image_order == 168 && r.image_perfect,
          "coset action image order " + std::to_string(r.image_order) + (r.image_perfect ? ", perfect" : ", not perfect"));
  if (!r.subgroup) return;
  auto q = find_quadruples(*r.subgroup, std::nullopt, ctx.search);
  auto ns = q.n_set();
  c.check(ns.count(36) > 0, "36 in the quadruple n_set of the order-12096 subgroup " + set_text(ns));
  c.check(ns.count(2) > 0 || ns.count(4) > 0, "n_set meets {2,4}");
  auto ind = induced_quadruple(h, *t.witness, *r.subgroup);
  c.check(ind.n_values.count(36) > 0 && ind.projection_check,
          "canonical (2,2,2,3) systems of the preimage, certified exactly, give n in " + set_text(ind.n_values));
  if (ind.first) c.info("first certified system has n = " + std::to_string(ind.first->images.n));
}

void data_groups(Checks& c, const CriterionContext& ctx) {
  if (data_file_present("m12", ctx)) {
    auto r = classify(spec_group("file:m12", ctx), ctx.search);
    c.check(handle_part(r.n_set) == std::set<std::uint64_t>{3, 4, 5},
            "M12 n_set " + set_text(r.n_set) + " meets {2,3,4,5} in {3,4,5}");
  } else {
    c.skip("M12 generator file absent");
  }
  if (data_file_present("j1", ctx)) {
    auto g = spec_group("file:j1", ctx);
    auto r = classify(g, ctx.search);
    c.check(r.n_set.count(2) > 0, "J1 n_set " + set_text(r.n_set) + " contains 2");
    auto e = survey_extensions(g, ctx.search);
    c.check(e.extendable > 0, "J1 Hurwitz triple extends to [2,3,7] (" + std::to_string(e.extendable) + " of " +
                                  std::to_string(e.triples) + " triples)");
  } else {
    c.skip("J1 generator file absent");
  }
  auto a9 = classify(make_standard(StandardFamily::kAlternating, 9), ctx.search);
  c.check(a9.n_set.count(3) > 0 && a9.n_set.count(2) == 0, "A9 n_set " + set_text(a9.n_set) + " has 3, not 2");
  c.check(a9.triples.total == 0, "A9 has no Hurwitz triples");
}

void j2(Checks& c, const CriterionContext& ctx) {
  if (!data_file_present("j2", ctx)) {
    c.skip("J2 generator file absent");
    return;
  }
  auto g = spec_group("file:j2", ctx);
  auto e = survey_extensions(g, ctx.search);
  c.check(e.triples > 0, "J2 has Hurwitz triples (" + std::to_string(e.triples) + ")");
  c.check(e.extendable == 0, "no J2 Hurwitz triple extends to [2,3,7]");
  auto q = find_quadruples(g, std::nullopt, ctx.search);
  c.info("J2 quadruple n_set " + set_text(q.n_set()) + ", meets {2,3,4,5} in " + set_text(handle_part(q.n_set())));
}

void properties(Checks& c, const CriterionContext& ctx) {
  const std::vector<GroupHandle> groups{make_psl2(7),  make_psl2(8), make_psl2(13), make_pgl2(7),
                                        make_standard(StandardFamily::kSymmetric, 4),
                                        make_standard(StandardFamily::kDihedral, 6),
                                        make_standard(StandardFamily::kAlternating, 5)};
  bool revalidated = true, divides = true, products = true, genera = true;
  for (const auto& g : groups) {
    auto t = find_triples(g, kHurwitzType, ctx.search);
    auto q = find_quadruples(g, std::nullopt, ctx.search);
    if (t.witness) revalidated &= validate_triple(g, *t.witness);
    for (const auto& [n, w] : q.witnesses) {
      revalidated &= validate_quadruple(g, w);
      products &= element_order(w.x1 * w.x2) == element_order(w.x3 * w.x4);
    }
    if (auto a = g.metadata().aut_order) divides &= t.total % *a == 0 && q.total % *a == 0;
    if (t.total > 0) genera &= 84 * (surface_genus_from_order(g.order(), sig("(0;2,3,7)")) - 1) == std::int64_t(g.order());
    if (q.total > 0) genera &= 12 * (surface_genus_from_order(g.order(), sig("(0;2,2,2,3)")) - 1) == std::int64_t(g.order());
  }
  for (const auto& q : all_quadruples(make_standard(StandardFamily::kSymmetric, 4)))
    products &= element_order(q.x1 * q.x2) == element_order(q.x3 * q.x4);
  c.check(revalidated, "every witness re-validates from scratch");
  c.check(divides, "aut_order divides every tuple count");
  c.check(products, "|x1 x2| = |x3 x4| for every quadruple checked");
  c.check(genera, "genera from 84(g-1) and 12(g-1) are integral and consistent");

  bool chi = true;
  for (std::uint64_t q : {7, 8}) {
    auto g = make_psl2(q);
    auto triple = *find_triples(g).witness;
    const Rational parent = euler_characteristic(sig("(0;2,3,7)"));
    for (std::uint64_t order : {7, 21, 24, 56})
      if (g.order() % order == 0)
        for (const auto& u : find_subgroups_of_order(g, order))
          chi &= euler_characteristic(preimage_signature(g, triple, u)) ==
                 Rational(std::int64_t(g.order() / order)) * parent;
  }
  for (std::int64_t d = 2; d <= 30; ++d)
    for (const auto& s : enumerate_subgroup_signatures(sig("(0;2,3,7)"), d))
      chi &= euler_characteristic(s) == Rational(d) * euler_characteristic(sig("(0;2,3,7)"));
  c.check(chi, "chi(subgroup) = index * chi(parent) for found subgroups and all candidates");

  bool threads = true;
  for (std::uint64_t q : {8, 13}) {
    auto g = make_psl2(q);
    SearchOptions s = ctx.search;
    s.kernel = Kernel::kSerial;
    auto t0 = find_triples(g, kHurwitzType, s).total;
    auto q0 = find_quadruples(g, std::nullopt, s).n_distribution;
    for (int n : {1, 2, 4}) {
      SearchOptions p = ctx.search;
      p.kernel = Kernel::kParallel;
      p.threads = n;
      threads &= find_triples(g, kHurwitzType, p).total == t0;
      threads &= find_quadruples(g, std::nullopt, p).n_distribution == q0;
    }
  }
  c.check(threads, "counts identical for the serial kernel and 1, 2, 4 threads");

  bool snf = true;
  std::mt19937_64 rng(ctx.search.seed);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> ms(3 + rng() % 3);
    for (auto& m : ms) m = 2 + static_cast<std::int64_t>(rng() % 12);
    Signature s(0, ms);
    auto ab = abelianization(s);
    if (ab.free_rank != 0) continue;
    std::int64_t prod = 1;
    for (auto d : ab.torsion) prod *= d;
    snf &= prod == maximal_minor_gcd(relation_matrix(s));
  }
  c.check(snf, "Smith invariants multiply to the gcd of maximal minors (200 random signatures)");
}

struct Item {
  const char* title;
  double budget;
  void (*body)(Checks&, const CriterionContext&);
};

const Item kItems[kCriterionCount] = {
    {"PSL2(7): one Hurwitz class, no quadrangle quotient, no D7", 5, psl27},
    {"PSL2(8): Hurwitz classes, genus 7, order-56 irreducible subgroup", 30, psl28},
    {"PSL2(q) Hurwitz survey up to q = 49", 600, survey},
    {"genus table", 1, genus_table},
    {"signature calculus", 5, signature_calculus},
    {"PSL2(27): G7-group, not a handlebody group", 1800, psl227},
    {"S4: quadruple n-set and uniqueness", 1, s4},
    {"PSL2(7) x PSL2(8): class count, index-7 action, n = 36", 7200, product},
    {"M12, J1, A9 classification", 14400, data_groups},
    {"J2 exploration", 14400, j2},
    {"property suites", 600, properties},
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kSkip:
      return "SKIP";
  }
  return "?";
}

CriterionResult run_criterion(int id, const CriterionContext& ctx) {
  if (id < 1 || id > kCriterionCount) throw UsageError("no reproduction item " + std::to_string(id));
  const Item& item = kItems[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = item.title;
  r.budget_seconds = item.budget;
  Checks c(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    item.body(c, ctx);
  } catch (const std::exception& e) {
    c.check(false, std::string("raised: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.budget_seconds) c.check(false, "over the time budget");
  r.status = c.failed() ? Status::kFail : c.skipped() ? Status::kSkip : Status::kPass;
  return r;
}

std::vector<int> suite_members(std::string_view suite) {
  if (suite == "fast") return {1, 2, 4, 5, 7, 11};
  if (suite == "full") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 11};
  if (suite == "data") return {9, 10};
  throw UsageError("unknown suite '" + std::string(suite) + "' (fast, full, data)");
}

std::string summary_line(const CriterionResult& r) {
  char timing[96];
  std::snprintf(timing, sizeof timing, "(%.2f s, budget %g s)", r.seconds, r.budget_seconds);
  return "[" + std::string(status_name(r.status)) + "] " + std::to_string(r.id) + " " + r.title + " " + timing;
}

}  // namespace tql::cli
