#include "kint/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kint/expansion.hpp"
#include "kint/hardness.hpp"
#include "kint/io.hpp"
#include "kint/merge.hpp"
#include "kint/oracles.hpp"
#include "kint/ordering.hpp"
#include "kint/ps_solver.hpp"

namespace kint {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string big_to_string(const BigInt& v) { return v.str(); }

std::string join_ids(const std::vector<int>& ids, char prefix) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ' ';
    if (prefix) out += prefix;
    out += std::to_string(id);
  }
  return out;
}

std::string trim_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

// Plain `key: value` lines and the structured object, filled side by side.
class Report {
 public:
  explicit Report(std::string command) { obj_["command"] = std::move(command); }

  void line(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  json& field(const std::string& key) { return obj_[key]; }

  void timing(const std::string& phase, Clock::duration d) {
    timings_[phase] = std::chrono::duration<double, std::milli>(d).count();
  }

  void print(std::ostream& out, bool as_json, bool with_timings) {
    if (with_timings && !timings_.empty()) obj_["timings"] = timings_;
    if (as_json) {
      out << obj_.dump() << '\n';
      return;
    }
    for (const auto& [k, v] : lines_) out << k << ": " << v << '\n';
    if (with_timings)
      for (const auto& [phase, ms] : timings_.items()) out << "time-" << phase << "-ms: " << ms.get<double>() << '\n';
  }

 private:
  json obj_ = json::object();
  json timings_ = json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Common {
  bool json = false;
  bool timings = false;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_flag("--json", common.json, "Single JSON object on stdout");
  sub->add_flag("--timings", common.timings, "Include wall-clock timings (output no longer reproducible)");
}

struct Stripped {
  Formula formula;                  // without empty clauses
  std::vector<ClauseId> original;   // new id - 1 -> original id
  std::vector<ClauseId> removed;
};

Stripped strip_empty(const Formula& f) {
  Stripped s;
  std::vector<Clause> kept;
  for (const auto& c : f.clauses()) {
    if (c.empty()) {
      s.removed.push_back(c.id);
      continue;
    }
    kept.push_back(c);
    s.original.push_back(c.id);
  }
  s.formula = Formula(f.var_count(), std::move(kept));
  return s;
}

SideOrders restrict_orders(const SideOrders& so, const Stripped& s, int original_m) {
  std::vector<ClauseId> new_id(static_cast<std::size_t>(original_m) + 1, 0);
  for (std::size_t i = 0; i < s.original.size(); ++i) new_id[static_cast<std::size_t>(s.original[i])] = static_cast<ClauseId>(i + 1);
  SideOrders out;
  out.var_order = so.var_order;
  for (ClauseId c : so.clause_order)
    if (new_id[static_cast<std::size_t>(c)] != 0) out.clause_order.push_back(new_id[static_cast<std::size_t>(c)]);
  return out;
}

MixedOrdering to_original_ids(const MixedOrdering& order, const Stripped& s) {
  MixedOrdering out = order;
  for (auto& e : out.sequence)
    if (e.is_clause()) e.id = s.original[static_cast<std::size_t>(e.id - 1)];
  return out;
}

struct MergeOutcome {
  Stripped stripped;
  MergeResult result;  // over the stripped formula
};

MergeOutcome run_merge(const Formula& f, const SideOrders& so, Report& rep) {
  MergeOutcome mo{strip_empty(f), {}};
  auto t0 = Clock::now();
  mo.result = min_merge_k(mo.stripped.formula, restrict_orders(so, mo.stripped, f.clause_count()));
  rep.timing("merge", Clock::now() - t0);
  const std::string ordering = trim_newline(emit_mixed_ordering(to_original_ids(mo.result.ordering, mo.stripped)));
  if (!mo.stripped.removed.empty()) rep.line("stripped", join_ids(mo.stripped.removed, 'c'));
  rep.line("k", std::to_string(mo.result.k));
  rep.line("ordering", ordering);
  rep.field("k") = mo.result.k;
  rep.field("ordering") = ordering;
  if (!mo.stripped.removed.empty()) rep.field("answer")["stripped"] = mo.stripped.removed;
  return mo;
}

void report_solve(const Formula& f, const MixedOrdering& order, const std::string& mode, Report& rep) {
  auto t0 = Clock::now();
  if (mode == "count") {
    auto r = count_models(f, order);
    rep.timing("solve", Clock::now() - t0);
    rep.line("models", big_to_string(r.count));
    rep.line("state-max", std::to_string(r.stats.max_states));
    rep.field("answer") = big_to_string(r.count);
    rep.field("stateMax") = r.stats.max_states;
    return;
  }
  auto r = max_weight(f, order);
  rep.timing("solve", Clock::now() - t0);
  std::vector<int> lits;
  for (VarId v = 1; v <= f.var_count(); ++v) lits.push_back(r.witness.value(v) ? v : -v);
  rep.line("weight", std::to_string(r.weight));
  rep.line("witness", join_ids(lits, 0));
  rep.line("state-max", std::to_string(r.stats.max_states));
  rep.field("answer") = json{{"weight", r.weight}, {"witness", lits}};
  rep.field("stateMax") = r.stats.max_states;
}

std::vector<int> parse_csv_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw CLI::ValidationError("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-interval orderings, merging and exact #SAT / MaxSAT over an ordering", "kint"};
  app.require_subcommand(1);
  Common common;

  std::string cnf_path, orders_path, ordering_path, mode = "count";
  std::string out_path, map_path, ordering_out_path, rep_out_path, graph_path, rep_path;
  std::string what = "count";
  std::string sizes_csv, partition_text;
  int cap = -1, check_k = 1;
  int gen_b = 0, gen_n = 0, gen_m = 0, gen_k = 0, gen_width = 0;
  std::uint64_t seed = 0;

  auto* merge = app.add_subcommand("merge", "Minimum k merge of a variable order and a clause order");
  merge->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  merge->add_option("--orders", orders_path, "Side orders file (default: identity)");
  add_common(merge, common);

  auto* check = app.add_subcommand("check", "Verify an ordering, or an interval representation of a bigraph");
  check->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file");
  check->add_option("--ordering", ordering_path, "Mixed ordering file");
  check->add_option("--graph", graph_path, "Labelled bigraph file (representation mode)");
  check->add_option("--rep", rep_path, "Interval representation file (representation mode)");
  check->add_option("--k", check_k, "Allowed added edges per designated vertex (representation mode)");
  add_common(check, common);

  auto* obstruct = app.add_subcommand("obstruct", "Look for a pattern that forbids an interval merge");
  obstruct->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  obstruct->add_option("--orders", orders_path, "Side orders file (default: identity)");
  add_common(obstruct, common);

  auto* solve = app.add_subcommand("solve", "Exact model count or weighted MaxSAT over an ordering");
  solve->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  auto* solve_ordering = solve->add_option("--ordering", ordering_path, "Mixed ordering file");
  auto* solve_orders = solve->add_option("--orders", orders_path, "Side orders file; merged first");
  solve_ordering->excludes(solve_orders);
  solve->add_option("--mode", mode, "count | maxsat")->check(CLI::IsMember({"count", "maxsat"}));
  add_common(solve, common);

  auto* pipeline = app.add_subcommand("pipeline", "Merge to minimum k, then solve over the merged ordering");
  pipeline->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  pipeline->add_option("--orders", orders_path, "Side orders file (default: identity)");
  pipeline->add_option("--mode", mode, "count | maxsat")->check(CLI::IsMember({"count", "maxsat"}));
  add_common(pipeline, common);

  auto* expand = app.add_subcommand("expand", "Expand every clause over its needed edges");
  expand->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  expand->add_option("--ordering", ordering_path, "Mixed ordering file")->required();
  expand->add_option("-o,--out", out_path, "Write the expanded DIMACS here instead of stdout");
  expand->add_option("--map", map_path, "Write 'parent: <id> -> <ids>' lines here");
  expand->add_option("--ordering-out", ordering_out_path, "Write the expanded ordering here");
  add_common(expand, common);

  auto* pswidth = app.add_subcommand("pswidth", "ps-width of an ordering");
  pswidth->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  pswidth->add_option("--ordering", ordering_path, "Mixed ordering file")->required();
  pswidth->add_option("--cap", cap, "Max variables per cut fragment");
  add_common(pswidth, common);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->add_option("cnf", cnf_path, "DIMACS cnf/wcnf file")->required();
  oracle->add_option("--what", what, "count | maxsat | mergek")->check(CLI::IsMember({"count", "maxsat", "mergek"}));
  oracle->add_option("--orders", orders_path, "Side orders file for mergek (default: identity)");
  oracle->add_option("--cap", cap, "Variable cap (count, maxsat) or interleaving cap (mergek)");
  add_common(oracle, common);

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  auto* gen3 = gen->add_subcommand("3part", "3-Partition reduction graph");
  gen3->add_option("--b", gen_b, "Target sum b")->required();
  gen3->add_option("--sizes", sizes_csv, "Comma-separated element sizes")->required();
  gen3->add_option("--partition", partition_text, "Solution triples, e.g. '1,2,3;4,5,6'");
  gen3->add_option("-o,--out", out_path, "Write the labelled edge list here");
  gen3->add_option("--rep-out", rep_out_path, "Write the interval representation here");
  add_common(gen3, common);
  auto* genr = gen->add_subcommand("random", "Random k-interval formula with its ordering");
  genr->add_option("--n", gen_n, "Variables")->required();
  genr->add_option("--m", gen_m, "Clauses")->required();
  genr->add_option("--k", gen_k, "Max dropped variables per clause")->required();
  genr->add_option("--width", gen_width, "Max clause width")->required();
  genr->add_option("--seed", seed, "Random seed")->required();
  genr->add_option("-o,--out", out_path, "Write DIMACS here instead of stdout");
  genr->add_option("--ordering-out", ordering_out_path, "Write the ordering here");
  add_common(genr, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kint: " << e.what() << '\n';
    if (e.get_exit_code() == 0) return kExitOk;
    return kExitUsage;
  }

  try {
    auto load_formula = [&] { return parse_dimacs(read_file(cnf_path)); };
    auto load_orders = [&](const Formula& f) {
      return orders_path.empty() ? identity_orders(f) : parse_orders(read_file(orders_path), f);
    };
    auto load_ordering = [&](const Formula& f) { return parse_mixed_ordering(read_file(ordering_path), f); };
    auto finish = [&](Report& rep, int code) {
      rep.print(out, common.json, common.timings);
      return code;
    };

    if (merge->parsed()) {
      Report rep("merge");
      const Formula f = load_formula();
      run_merge(f, load_orders(f), rep);
      return finish(rep, kExitOk);
    }

    if (check->parsed()) {
      Report rep("check");
      if (!graph_path.empty() || !rep_path.empty()) {
        if (graph_path.empty() || rep_path.empty()) throw CLI::ValidationError("--graph and --rep go together");
        auto g = parse_labeled_bigraph(read_file(graph_path));
        auto verdict = check_representation(g, parse_representation(read_file(rep_path)), check_k);
        rep.line("accept", verdict.accept ? "yes" : "no");
        rep.line("k", std::to_string(check_k));
        rep.line("max-excess", std::to_string(verdict.max_excess));
        for (const auto& [u, v] : verdict.edges_without_overlap) rep.line("edge-without-overlap", u + " " + v);
        json excess = json::object();
        for (const auto& ex : verdict.excess) {
          std::string names;
          for (const auto& nm : ex.overlapped_non_neighbours) names += (names.empty() ? "" : " ") + nm;
          rep.line("excess " + ex.vertex, names);
          excess[ex.vertex] = ex.overlapped_non_neighbours;
        }
        rep.field("k") = check_k;
        rep.field("answer") = json{{"accept", verdict.accept},
                                   {"maxExcess", verdict.max_excess},
                                   {"edgesWithoutOverlap", verdict.edges_without_overlap},
                                   {"excess", excess}};
        return finish(rep, verdict.accept ? kExitOk : kExitNegative);
      }
      if (cnf_path.empty() || ordering_path.empty()) throw CLI::ValidationError("check needs <cnf> and --ordering");
      const Formula f = load_formula();
      const MixedOrdering order = load_ordering(f);
      auto verdict = verify_interval_ordering(f, order);
      auto needed = all_edges_needed(f, order);
      int k = 0;
      for (const auto& n : needed) k = std::max(k, static_cast<int>(n.size()));
      rep.line("interval", verdict.ok ? "yes" : "no");
      rep.line("k", std::to_string(k));
      json answer{{"interval", verdict.ok}};
      if (verdict.violation) {
        const auto& v = *verdict.violation;
        const char* cond = v.condition == Condition::Cond1 ? "Cond1" : "Cond2";
        rep.line("violation", "c" + std::to_string(v.clause) + " x" + std::to_string(v.var) + " " + cond);
        answer["violation"] = json{{"clause", v.clause}, {"var", v.var}, {"condition", cond}};
      }
      json per_clause = json::object();
      for (std::size_t i = 0; i < needed.size(); ++i) {
        const std::string key = "c" + std::to_string(i + 1);
        rep.line("needed " + key, join_ids(needed[i], 'x'));
        per_clause[key] = needed[i];
      }
      answer["needed"] = per_clause;
      rep.field("k") = k;
      rep.field("ordering") = trim_newline(emit_mixed_ordering(order));
      rep.field("answer") = answer;
      return finish(rep, verdict.ok ? kExitOk : kExitNegative);
    }

    if (obstruct->parsed()) {
      Report rep("obstruct");
      const Formula f = load_formula();
      auto ob = find_obstruction(f, load_orders(f));
      if (!ob) {
        rep.line("obstruction", "none");
        rep.field("answer") = nullptr;
        return finish(rep, kExitOk);
      }
      json answer;
      std::string text;
      if (ob->kind == Obstruction::Kind::LeftPattern) {
        text = "left x=x" + std::to_string(ob->x) + " z=x" + std::to_string(ob->z) + " A=c" + std::to_string(ob->a) +
               " C=c" + std::to_string(ob->c);
        answer = json{{"kind", "left"}, {"x", ob->x}, {"z", ob->z}, {"A", ob->a}, {"C", ob->c}};
      } else {
        text = "right x=x" + std::to_string(ob->x) + " y=x" + std::to_string(ob->y) + " z=x" + std::to_string(ob->z) +
               " A=c" + std::to_string(ob->a) + " B=c" + std::to_string(ob->b) + " C=c" + std::to_string(ob->c);
        answer = json{{"kind", "right"}, {"x", ob->x}, {"y", ob->y}, {"z", ob->z},
                      {"A", ob->a},      {"B", ob->b}, {"C", ob->c}};
      }
      rep.line("obstruction", text);
      rep.field("answer") = answer;
      return finish(rep, kExitNegative);
    }

    if (solve->parsed()) {
      Report rep("solve");
      const Formula f = load_formula();
      if (!ordering_path.empty()) {
        report_solve(f, load_ordering(f), mode, rep);
        return finish(rep, kExitOk);
      }
      if (orders_path.empty()) throw CLI::ValidationError("solve needs --ordering or --orders");
      auto mo = run_merge(f, load_orders(f), rep);
      // Empty clauses were set aside for the merge: they zero the count and never add weight.
      if (mode == "count" && !mo.stripped.removed.empty()) {
        rep.line("models", "0");
        rep.field("answer") = "0";
        return finish(rep, kExitOk);
      }
      report_solve(mo.stripped.formula, mo.result.ordering, mode, rep);
      return finish(rep, kExitOk);
    }

    if (pipeline->parsed()) {
      Report rep("pipeline");
      const Formula f = load_formula();
      auto mo = run_merge(f, load_orders(f), rep);
      if (mode == "count" && !mo.stripped.removed.empty()) {
        rep.line("models", "0");
        rep.field("answer") = "0";
        return finish(rep, kExitOk);
      }
      report_solve(mo.stripped.formula, mo.result.ordering, mode, rep);
      return finish(rep, kExitOk);
    }

    if (expand->parsed()) {
      Report rep("expand");
      const Formula f = load_formula();
      const MixedOrdering order = load_ordering(f);
      auto ex = expand_to_interval(f, order);
      std::string map_text;
      for (std::size_t c = 0; c < ex.parents.size(); ++c)
        map_text += "parent: " + std::to_string(c + 1) + " -> " + join_ids(ex.parents[c], 0) + "\n";
      const std::string dimacs = emit_dimacs(ex.formula);
      const std::string ordering = emit_mixed_ordering(ex.ordering);
      if (!map_path.empty()) write_file(map_path, map_text);
      if (!ordering_out_path.empty()) write_file(ordering_out_path, ordering);
      if (!out_path.empty()) write_file(out_path, dimacs);

      if (common.json) {
        rep.field("k") = ordering_width_k(f, order);
        rep.field("ordering") = trim_newline(ordering);
        json parents = json::object();
        for (std::size_t c = 0; c < ex.parents.size(); ++c) parents[std::to_string(c + 1)] = ex.parents[c];
        rep.field("answer") = json{{"clauses", ex.formula.clause_count()}, {"parents", parents}};
        if (out_path.empty()) rep.field("answer")["dimacs"] = dimacs;
        return finish(rep, kExitOk);
      }
      if (out_path.empty()) {
        out << dimacs;
        if (map_path.empty()) {
          std::istringstream lines(map_text);
          for (std::string l; std::getline(lines, l);) out << "c " << l << '\n';
        }
        if (ordering_out_path.empty()) out << "c ordering: " << ordering;
      } else {
        out << "clauses: " << ex.formula.clause_count() << '\n';
        if (map_path.empty()) out << map_text;
        if (ordering_out_path.empty()) out << "ordering: " << ordering;
      }
      return kExitOk;
    }

    if (pswidth->parsed()) {
      Report rep("pswidth");
      const Formula f = load_formula();
      const MixedOrdering order = load_ordering(f);
      auto t0 = Clock::now();
      auto p = ps_width(f, order, cap < 0 ? kDefaultPsVarCap : cap);
      rep.timing("pswidth", Clock::now() - t0);
      rep.line("ps-width", std::to_string(p));
      rep.field("psWidth") = p;
      rep.field("k") = ordering_width_k(f, order);
      return finish(rep, kExitOk);
    }

    if (oracle->parsed()) {
      Report rep("oracle");
      const Formula f = load_formula();
      if (what == "count") {
        auto c = brute_count(f, cap < 0 ? kDefaultBruteVarCap : cap);
        rep.line("models", big_to_string(c));
        rep.field("answer") = big_to_string(c);
      } else if (what == "maxsat") {
        auto r = brute_max_weight(f, cap < 0 ? kDefaultBruteVarCap : cap);
        std::vector<int> lits;
        for (VarId v = 1; v <= f.var_count(); ++v) lits.push_back(r.witness.value(v) ? v : -v);
        rep.line("weight", std::to_string(r.weight));
        rep.line("witness", join_ids(lits, 0));
        rep.field("answer") = json{{"weight", r.weight}, {"witness", lits}};
      } else {
        auto k = brute_min_merge_k(f, load_orders(f),
                                   cap < 0 ? kDefaultInterleavingCap : static_cast<std::uint64_t>(cap));
        rep.line("k", std::to_string(k));
        rep.field("k") = k;
      }
      return finish(rep, kExitOk);
    }

    if (gen3->parsed()) {
      Report rep("gen");
      ThreePartitionInstance inst{gen_b, parse_csv_ints(sizes_csv, ',')};
      auto g = gen_3partition_bigraph(inst);
      if (!out_path.empty()) write_file(out_path, emit_labeled_bigraph(g));
      rep.line("vertices", std::to_string(g.vertices.size()));
      rep.line("edges", std::to_string(g.edges.size()));
      rep.line("track-degree", std::to_string(g.degree("t")));
      json answer{{"vertices", g.vertices.size()}, {"edges", g.edges.size()}, {"trackDegree", g.degree("t")}};
      int code = kExitOk;
      if (!partition_text.empty()) {
        std::vector<std::vector<int>> partition;
        std::stringstream ss(partition_text);
        for (std::string group; std::getline(ss, group, ';');) partition.push_back(parse_csv_ints(group, ','));
        auto r = representation_from_partition(inst, partition);
        if (!rep_out_path.empty()) write_file(rep_out_path, emit_representation(r));
        bool ok1 = check_representation(g, r, 1).accept;
        bool ok0 = check_representation(g, r, 0).accept;
        rep.line("accept-k1", ok1 ? "yes" : "no");
        rep.line("accept-k0", ok0 ? "yes" : "no");
        answer["acceptK1"] = ok1;
        answer["acceptK0"] = ok0;
        if (!ok1) code = kExitNegative;
      }
      rep.field("answer") = answer;
      return finish(rep, code);
    }

    if (genr->parsed()) {
      auto inst = random_k_interval_instance(gen_n, gen_m, gen_k, gen_width, seed);
      const std::string dimacs = emit_dimacs(inst.formula);
      const std::string ordering = emit_mixed_ordering(inst.ordering);
      if (!ordering_out_path.empty()) write_file(ordering_out_path, ordering);
      if (!out_path.empty()) write_file(out_path, dimacs);
      if (common.json) {
        Report rep("gen");
        rep.field("k") = ordering_width_k(inst.formula, inst.ordering);
        rep.field("ordering") = trim_newline(ordering);
        if (out_path.empty()) rep.field("answer") = json{{"dimacs", dimacs}};
        return finish(rep, kExitOk);
      }
      if (out_path.empty()) {
        out << dimacs;
        if (ordering_out_path.empty()) out << "c ordering: " << ordering;
      } else if (ordering_out_path.empty()) {
        out << "ordering: " << ordering;
      }
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    err << "kint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "kint: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kint: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "kint: no subcommand\n";
  return kExitUsage;
}

}  // namespace kint
