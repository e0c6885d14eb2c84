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

#include "tql/cli/app.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tql/cli/cache.hpp"
#include "tql/cli/criteria.hpp"
#include "tql/cli/payload.hpp"
#include "tql/error.hpp"
#include "tql/fuchsian/smith.hpp"
#include "tql/perm/subgroup.hpp"
#include "tql/zoo/group_spec.hpp"

namespace tql::cli {

namespace {

struct Globals {
  int threads = 0;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string cache;
  std::string data_dir;
};

/// Raised after the report is printed when the verb's own verdict fails.
struct ReproductionFailure : Error {
  using Error::Error;
};

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

  SearchOptions search() const {
    SearchOptions o;
    o.threads = g_.threads;
    o.seed = g_.seed;
    return o;
  }

  std::filesystem::path data_dir() const { return g_.data_dir.empty() ? default_data_dir() : std::filesystem::path(g_.data_dir); }

  GroupHandle group(const std::string& spec) const { return build_from_spec(parse_group_spec(spec), data_dir()); }

  /// Computes (or recalls) a payload and prints it. `config` must hold
  /// every option that can change the result.
  Json execute(const std::string& command, const std::string& spec, const Json& config,
               const std::function<Json()>& compute) {
    std::vector<std::string> digests;
    if (!spec.empty())
      for (const auto& f : spec_files(parse_group_spec(spec), data_dir())) digests.push_back(file_digest(f));
    const std::string key = cache_key(command, config.dump(), g_.seed, digests);

    std::string payload;
    std::optional<RunCache> cache;
    if (!g_.cache.empty()) cache.emplace(g_.cache);
    if (cache) {
      if (auto hit = cache->lookup(key)) payload = hit->payload;
    }
    if (payload.empty()) {
      const auto start = std::chrono::steady_clock::now();
      payload = compute().dump();
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (cache) cache->append({key, command, spec, g_.seed, seconds, payload, kToolVersion});
    }
    if (g_.format == "json") {
      out_ << payload << "\n";
    } else {
      out_ << render_table(Json::parse(payload));
    }
    return Json::parse(payload);
  }

  std::ostream& err() { return err_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::ostream& err_;
};

std::set<std::uint64_t> parse_number_set(const std::string& text) {
  std::set<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("expected a comma-separated list of positive integers: " + text);
    out.insert(std::stoull(item));
  }
  if (out.empty()) throw UsageError("empty number list");
  return out;
}

TripleType parse_type(const std::string& text) {
  std::vector<std::uint64_t> v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("triple type must look like 2,3,7");
    v.push_back(std::stoull(item));
  }
  if (v.size() != 3) throw UsageError("triple type must have three entries");
  return {v[0], v[1], v[2]};
}

GeneratingTriple hurwitz_witness(const GroupHandle& g, const SearchOptions& opt) {
  auto r = find_triples(g, kHurwitzType, opt);
  if (!r.witness) throw UsageError(g.name() + " has no (2,3,7) generating triple");
  return *r.witness;
}

Json group_json(const GroupHandle& g) {
  Json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["aut_order"] = g.metadata().aut_order ? Json(*g.metadata().aut_order) : Json(nullptr);
  Json gens = Json::array();
  for (const auto& s : g.generators()) gens.push_back(to_json(s));
  j["generators"] = gens;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  if (const char* t = std::getenv("TQL_THREADS")) {
    try {
      g.threads = std::stoi(t);
    } catch (const std::exception&) {
      err << "error: TQL_THREADS must be an integer\n";
      return kExitUsage;
    }
  }
  if (const char* c = std::getenv("TQL_CACHE")) g.cache = c;

  CLI::App app{"Finite quotients of the (2,3,7) triangle and (2,2,2,3) quadrangle groups", "tql"};
  app.require_subcommand(1);
  // Global flags may follow the verb.
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--threads", g.threads, "OpenMP threads (default: runtime, or TQL_THREADS)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for randomized fast paths and subgroup search");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache", g.cache, "directory of the append-only run cache (default: TQL_CACHE)");
  app.add_option("--data-dir", g.data_dir, "directory searched for file: group specs");

  Runner runner(g, out, err);
  std::function<void()> action;
  std::string spec;

  auto* hurwitz = app.add_subcommand("hurwitz", "count generating (l,m,k) triples (default 2,3,7)");
  std::string type_text = "2,3,7";
  hurwitz->add_option("spec", spec, "group spec")->required();
  hurwitz->add_option("--type", type_text, "periods l,m,k");
  hurwitz->callback([&] {
    action = [&] {
      const TripleType type = parse_type(type_text);
      runner.execute("hurwitz", spec, Json{{"spec", spec}, {"type", type}}, [&] {
        auto grp = runner.group(spec);
        Json j{{"group", group_json(grp)}};
        j.update(to_json(find_triples(grp, type, runner.search())));
        return j;
      });
    };
  });

  auto* quad = app.add_subcommand("quad", "count generating (2,2,2,3) quadruples by n = |x1 x2|");
  std::uint64_t nmax = 0;
  std::string nlist;
  bool nset_only = false;
  quad->add_option("spec", spec, "group spec")->required();
  quad->add_option("--nmax", nmax, "only n <= K (pruned before the generation test)");
  quad->add_option("--n", nlist, "only these n, comma separated");
  quad->add_flag("--nset", nset_only, "report only the set of realized n");
  quad->callback([&] {
    action = [&] {
      std::optional<std::set<std::uint64_t>> filter;
      if (nmax > 0) {
        filter.emplace();
        for (std::uint64_t n = 1; n <= nmax; ++n) filter->insert(n);
      }
      if (!nlist.empty()) {
        auto s = parse_number_set(nlist);
        if (filter) {
          std::set<std::uint64_t> both;
          for (auto n : s)
            if (filter->count(n)) both.insert(n);
          s = both;
        }
        filter = s;
      }
      Json config{{"spec", spec}, {"filter", filter ? Json(*filter) : Json(nullptr)}, {"nset", nset_only}};
      runner.execute("quad", spec, config, [&] {
        auto grp = runner.group(spec);
        auto r = find_quadruples(grp, filter, runner.search());
        if (nset_only) {
          auto ns = r.n_set();
          return Json{{"total", r.total}, {"n_set", std::vector<std::uint64_t>(ns.begin(), ns.end())}};
        }
        Json j{{"group", group_json(grp)}};
        j.update(to_json(r));
        return j;
      });
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Hurwitz, maximal reducible, handlebody, bounded surface, G7");
  classify_cmd->add_option("spec", spec, "group spec")->required();
  classify_cmd->callback([&] {
    action = [&] {
      runner.execute("classify", spec, Json{{"spec", spec}}, [&] {
        auto grp = runner.group(spec);
        Json j{{"group", group_json(grp)}};
        j.update(to_json(classify(grp, runner.search())));
        return j;
      });
    };
  });

  auto* survey = app.add_subcommand("survey", "Hurwitz survey of a family");
  std::string family;
  std::uint64_t qmax = 0, limit = kDefaultSurveyLimit;
  survey->add_option("family", family, "group family")->required()->check(CLI::IsMember({"psl2"}));
  survey->add_option("--qmax", qmax, "largest q")->required();
  survey->add_option("--limit", limit, "refuse q_max above this");
  survey->callback([&] {
    action = [&] {
      auto j = runner.execute("survey", "", Json{{"family", family}, {"qmax", qmax}, {"limit", limit}}, [&] {
        return to_json(hurwitz_survey_psl2(qmax, runner.search(), limit));
      });
      if (!j.at("consistent").get<bool>()) throw ReproductionFailure("survey disagrees with the arithmetic criterion");
    };
  });

  auto* d7 = app.add_subcommand("d7", "find an involution inverting an element of order k");
  std::uint64_t k = 7;
  d7->add_option("spec", spec, "group spec")->required();
  d7->add_option("--k", k, "element order");
  d7->callback([&] {
    action = [&] {
      runner.execute("d7", spec, Json{{"spec", spec}, {"k", k}}, [&] {
        auto w = inverting_involution_exists(runner.group(spec), k, runner.search());
        Json j{{"k", k}, {"found", w.has_value()}};
        j["z"] = w ? to_json(w->z) : Json(nullptr);
        j["t"] = w ? to_json(w->t) : Json(nullptr);
        return j;
      });
    };
  });

  auto* ext = app.add_subcommand("ext237", "test every Hurwitz triple for an extension to [2,3,7]");
  ext->add_option("spec", spec, "group spec")->required();
  ext->callback([&] {
    action = [&] {
      runner.execute("ext237", spec, Json{{"spec", spec}},
                     [&] { return to_json(survey_extensions(runner.group(spec), runner.search())); });
    };
  });

  auto* thm = app.add_subcommand("theorem1", "index-7 coset action of a Hurwitz group");
  std::uint64_t sub_order = 0, attempts = 64;
  bool induced = false;
  thm->add_option("spec", spec, "group spec")->required();
  thm->add_flag("--induced", induced, "also search canonical (2,2,2,3) systems of the preimage of U");
  thm->add_option("--subgroup-order", sub_order, "order of the index-7 subgroup (default |H|/7)");
  thm->add_option("--attempts", attempts, "random subgroup search attempts");
  thm->callback([&] {
    action = [&] {
      runner.execute("theorem1", spec, Json{{"spec", spec}, {"subgroup_order", sub_order}, {"attempts", attempts}, {"induced", induced}},
                     [&] {
                       auto h = runner.group(spec);
                       if (sub_order != 0 && sub_order * 7 != h.order())
                         throw UsageError("--subgroup-order must be |H|/7 = " + std::to_string(h.order() / 7));
                       SubgroupSearchOptions so;
                       so.seed = runner.search().seed;
                       so.attempts = attempts;
                       const auto triple = hurwitz_witness(h, runner.search());
                       const auto report = theorem1_check(h, triple, so);
                       Json j = to_json(report);
                       if (induced && report.subgroup)
                         j["induced"] = to_json(induced_quadruple(h, triple, *report.subgroup));
                       return j;
                     });
    };
  });

  auto* irr = app.add_subcommand("irreducible", "subgroups whose (2,3,7) preimage is again a triangle group");
  irr->add_option("spec", spec, "group spec")->required();
  irr->add_option("--attempts", attempts, "random subgroup search attempts");
  irr->callback([&] {
    action = [&] {
      runner.execute("irreducible", spec, Json{{"spec", spec}, {"attempts", attempts}}, [&] {
        auto h = runner.group(spec);
        SubgroupSearchOptions so;
        so.seed = runner.search().seed;
        so.attempts = attempts;
        return to_json(irreducible_subgroups(h, hurwitz_witness(h, runner.search()), so));
      });
    };
  });

  auto* subs = app.add_subcommand("subgroups", "random search for subgroups of a given order");
  std::uint64_t order = 0;
  subs->add_option("spec", spec, "group spec")->required();
  subs->add_option("--order", order, "subgroup order")->required();
  subs->add_option("--attempts", attempts, "random subgroup search attempts");
  subs->callback([&] {
    action = [&] {
      runner.execute("subgroups", spec, Json{{"spec", spec}, {"order", order}, {"attempts", attempts}}, [&] {
        SubgroupSearchOptions so;
        so.seed = runner.search().seed;
        so.attempts = attempts;
        Json rows = Json::array();
        for (const auto& u : find_subgroups_of_order(runner.group(spec), order, so)) {
          Json gens = Json::array();
          for (const auto& s : u.generators()) gens.push_back(to_json(s));
          auto orbit_list = orbits(u.degree(), u.generators());
          std::vector<std::size_t> lengths;
          for (const auto& o : orbit_list) lengths.push_back(o.size());
          rows.push_back(Json{{"order", u.order()}, {"orbit_lengths", lengths}, {"generators", gens}});
        }
        return Json{{"found", rows.size()}, {"subgroups", rows}};
      });
    };
  });

  auto* braid = app.add_subcommand("braid", "quadruple classes under conjugation and (2,2,2,3) braid moves");
  braid->add_option("spec", spec, "group spec")->required();
  braid->callback([&] {
    action = [&] {
      runner.execute("braid", spec, Json{{"spec", spec}}, [&] {
        return to_json(quadruple_braid_classes(runner.group(spec), 50'000'000, runner.search()));
      });
    };
  });

  auto* handles = app.add_subcommand("handles", "boundary of a product with handles");
  std::uint64_t n_order = 0, m_order = 0;
  handles->add_option("--order", n_order, "group order N")->required();
  handles->add_option("--triangle-image", m_order, "order M of the Hurwitz subgroup image")->required();
  handles->callback([&] {
    action = [&] {
      runner.execute("handles", "", Json{{"order", n_order}, {"triangle_image", m_order}},
                     [&] { return to_json(handles_bookkeeping(n_order, m_order)); });
    };
  });

  auto* info = app.add_subcommand("group", "order, degree and generators of a group spec");
  info->add_option("spec", spec, "group spec")->required();
  info->callback([&] {
    action = [&] { runner.execute("group", spec, Json{{"spec", spec}}, [&] { return group_json(runner.group(spec)); }); };
  });

  auto* sig = app.add_subcommand("sig", "signature arithmetic");
  sig->require_subcommand(1);
  std::string sig_text;
  std::int64_t index = 0, max_index = 24;
  auto* chi = sig->add_subcommand("chi", "Euler characteristic");
  chi->add_option("--sig", sig_text, "signature like (0;2,3,7)")->required();
  chi->callback([&] {
    action = [&] {
      runner.execute("sig chi", "", Json{{"sig", sig_text}}, [&] {
        auto s = parse_signature(sig_text);
        return Json{{"signature", s.to_string()}, {"chi", euler_characteristic(s).to_string()}};
      });
    };
  });
  auto* genus = sig->add_subcommand("genus", "surface genus for a group of the given order");
  genus->add_option("--sig", sig_text, "signature")->required();
  genus->add_option("--order", order, "group order")->required();
  genus->callback([&] {
    action = [&] {
      runner.execute("sig genus", "", Json{{"sig", sig_text}, {"order", order}}, [&] {
        auto s = parse_signature(sig_text);
        return Json{{"signature", s.to_string()}, {"order", order}, {"genus", surface_genus_from_order(order, s)}};
      });
    };
  });
  auto* ab = sig->add_subcommand("ab", "abelianization");
  ab->add_option("--sig", sig_text, "signature")->required();
  ab->callback([&] {
    action = [&] {
      runner.execute("sig ab", "", Json{{"sig", sig_text}}, [&] {
        auto s = parse_signature(sig_text);
        auto a = abelianization(s);
        return Json{{"signature", s.to_string()},
                    {"abelianization", a.to_string()},
                    {"torsion", a.torsion},
                    {"free_rank", a.free_rank}};
      });
    };
  });
  auto* cands = sig->add_subcommand("subcands", "candidate signatures of index-d subgroups");
  cands->add_option("--sig", sig_text, "signature")->required();
  cands->add_option("--index", index, "subgroup index")->required();
  cands->callback([&] {
    action = [&] {
      runner.execute("sig subcands", "", Json{{"sig", sig_text}, {"index", index}}, [&] {
        std::vector<std::string> list;
        for (const auto& s : enumerate_subgroup_signatures(parse_signature(sig_text), index))
          list.push_back(s.to_string());
        return Json{{"index", index}, {"candidates", list}};
      });
    };
  });
  auto* indices = sig->add_subcommand("indices", "indices with a genus-0 three-period candidate");
  indices->add_option("--sig", sig_text, "signature")->required();
  indices->add_option("--max", max_index, "largest index");
  indices->callback([&] {
    action = [&] {
      runner.execute("sig indices", "", Json{{"sig", sig_text}, {"max", max_index}}, [&] {
        return Json{{"indices", triangle_subgroup_indices(parse_signature(sig_text), max_index)}};
      });
    };
  });

  auto* repro = app.add_subcommand("repro", "run a reproduction suite");
  std::string suite;
  repro->add_option("suite", suite, "fast, full or data")->required();
  repro->callback([&] {
    action = [&] {
      auto members = suite_members(suite);
      CriterionContext ctx{runner.search(), runner.data_dir()};
      bool failed = false;
      for (int id : members) {
        auto r = run_criterion(id, ctx);
        out << summary_line(r) << "\n";
        for (const auto& d : r.details) out << "    " << d << "\n";
        failed |= r.status == Status::kFail;
      }
      if (failed) throw ReproductionFailure("suite " + suite + " has failing items");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (action) action();
    return kExitOk;
  } catch (const ReproductionFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitReproduction;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const DataIntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: corrupt payload: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIntegrity;
  }
}

}  // namespace tql::cli
