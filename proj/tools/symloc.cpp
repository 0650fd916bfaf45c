#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symloc/analysis.hpp"
#include "symloc/report.hpp"

namespace {

using symloc::json;

struct SchemeFlags {
  std::string labeling = "std";
  int cache_size = 0;
  std::string rank_order;
  std::string constraints_path;
};

void add_scheme_flags(CLI::App* cmd, SchemeFlags& flags) {
  cmd->add_option("--labeling", flags.labeling, "Edge labeling scheme")
      ->check(CLI::IsMember({"std", "feasible", "hit", "ranked"}))
      ->default_str("std");
  cmd->add_option("--c", flags.cache_size, "Cache size for the hit labeling");
  cmd->add_option("--rank-order", flags.rank_order,
                  "Cache-size ranking permutation for the ranked labeling (default identity)");
  cmd->add_option("--constraints", flags.constraints_path,
                  "Constraints file: one 'a b' pair per line, a before b");
}

symloc::FeasibilitySpec load_constraints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constraints file '" + path + "'");
  return symloc::parse_constraints(in);
}

symloc::LabelScheme make_scheme(const SchemeFlags& flags, int m) {
  symloc::FeasibilitySpec fs;
  if (!flags.constraints_path.empty()) fs = load_constraints(flags.constraints_path);
  if (flags.labeling == "std") {
    if (!flags.constraints_path.empty())
      throw std::runtime_error("the std labeling carries no feasibility; drop --constraints");
    if (flags.cache_size != 0 || !flags.rank_order.empty())
      throw std::runtime_error("the std labeling takes neither --c nor --rank-order");
    return symloc::LabelScheme::inverse_standard();
  }
  if (flags.labeling == "feasible") {
    if (flags.cache_size != 0 || !flags.rank_order.empty())
      throw std::runtime_error("the feasible labeling takes neither --c nor --rank-order");
    return symloc::LabelScheme::feasible_standard(std::move(fs));
  }
  if (flags.labeling == "hit") {
    if (flags.cache_size == 0) throw std::runtime_error("the hit labeling requires --c");
    if (!flags.rank_order.empty())
      throw std::runtime_error("the hit labeling does not take --rank-order");
    return symloc::LabelScheme::hit_feasible(flags.cache_size, std::move(fs));
  }
  if (flags.cache_size != 0)
    throw std::runtime_error("the ranked labeling does not take --c");
  symloc::Permutation order = flags.rank_order.empty()
                                  ? symloc::Permutation::identity(m)
                                  : symloc::parse_permutation(flags.rank_order);
  return symloc::LabelScheme::ranked_hit_feasible(std::move(order), std::move(fs));
}

symloc::CoverMode parse_mode(const std::string& name) {
  return name == "bruhat" ? symloc::CoverMode::Bruhat : symloc::CoverMode::Weak;
}

json perm_json(const symloc::Permutation& p) { return json(p.image()); }

json good_check_json(const SchemeFlags& flags, int m) {
  const auto report = symloc::check_good(make_scheme(flags, m), m);
  json out;
  out["check"] = "good";
  out["labeling"] = flags.labeling;
  out["holds"] = report.holds;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(
        {{"src", perm_json(w.src)}, {"tau1", perm_json(w.tau1)}, {"tau2", perm_json(w.tau2)}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

json el_check_json(const SchemeFlags& flags, int m, const std::string& mode) {
  const auto report = symloc::check_el(make_scheme(flags, m), m, parse_mode(mode));
  json out;
  out["check"] = "el";
  out["labeling"] = flags.labeling;
  out["mode"] = mode;
  out["holds"] = report.holds;
  out["intervals"] = report.intervals_checked;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"x", perm_json(w.x)},
                         {"y", perm_json(w.y)},
                         {"increasing_chains", w.increasing_chains},
                         {"lex_min", w.increasing_is_lex_min}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

json delta_check_json(int m) {
  const auto report = symloc::check_delta_hits(m);
  json out;
  out["check"] = "delta";
  out["holds"] = report.holds;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"src", perm_json(w.src)},
                         {"dst", perm_json(w.dst)},
                         {"c", w.c},
                         {"before", w.before},
                         {"after", w.after}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

json bruhat_equiv_check_json(int m) {
  const auto report = symloc::check_bruhat_equivalence(m);
  json out;
  out["check"] = "bruhat-equiv";
  out["holds"] = report.holds;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"u", perm_json(w.u)},
                         {"w", perm_json(w.w)},
                         {"leq", w.leq},
                         {"reachable", w.reachable}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

json oracle_check_json(int m) {
  const auto report = symloc::check_lru_oracle(m);
  json out;
  out["check"] = "oracle";
  out["holds"] = report.holds;
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"perm", perm_json(w.sigma)},
                         {"c", w.c},
                         {"hits", w.hits},
                         {"oracle", w.oracle}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cache locality of permuted data re-traversals"};
  app.require_subcommand(1);
  int exit_code = 0;

  // hits: distances, hit vector and miss ratios of one re-traversal
  auto* hits = app.add_subcommand("hits", "Stack distances, hit vector and miss ratios of B");
  std::string hits_perm;
  std::vector<int> hits_cs;
  bool hits_full = false;
  hits->add_option("--perm", hits_perm, "Re-traversal in one-line notation, e.g. 4,3,2,1")
      ->required();
  hits->add_option("--c", hits_cs, "Cache sizes to report miss ratios for");
  hits->add_flag("--full-trace", hits_full, "Miss ratio over all 2m accesses instead of B only");
  hits->callback([&] {
    symloc::TraceSpec spec{symloc::parse_permutation(hits_perm)};
    const auto scope = hits_full ? symloc::MissScope::FullTrace : symloc::MissScope::BOnly;
    std::cout << symloc::hits_report(spec, hits_cs, scope).dump(2) << "\n";
  });

  // chain: greedy chain construction
  auto* chain = app.add_subcommand("chain", "Greedy locality-improving chain of re-traversals");
  int chain_m = 0;
  std::string chain_start;
  std::string chain_mode = "weak";
  std::int64_t chain_max_steps = -1;
  SchemeFlags chain_scheme;
  chain->add_option("--m", chain_m, "Number of trace elements (start defaults to identity)");
  chain->add_option("--start", chain_start, "Starting permutation in one-line notation");
  add_scheme_flags(chain, chain_scheme);
  chain->add_option("--mode", chain_mode, "Cover mode")
      ->check(CLI::IsMember({"weak", "bruhat"}))
      ->default_str("weak");
  chain->add_option("--max-steps", chain_max_steps, "Stop after this many transitions");
  chain->callback([&] {
    if (chain_m == 0 && chain_start.empty())
      throw std::runtime_error("chain needs --m or --start");
    symloc::Permutation start = chain_start.empty()
                                    ? symloc::Permutation::identity(chain_m)
                                    : symloc::parse_permutation(chain_start);
    if (chain_m != 0 && start.size() != chain_m)
      throw std::runtime_error("--start does not match --m");
    std::optional<std::size_t> max_steps;
    if (chain_max_steps >= 0) max_steps = static_cast<std::size_t>(chain_max_steps);
    const auto result = symloc::chain_find(start, make_scheme(chain_scheme, start.size()),
                                           parse_mode(chain_mode), max_steps);
    std::cout << symloc::chain_report(result).dump(2) << "\n";
  });

  // graph: covering graph DOT export
  auto* graph = app.add_subcommand("graph", "Covering graph of S_m as DOT");
  int graph_m = 0;
  std::string graph_mode = "weak";
  std::string graph_annotate = "none";
  int graph_cap = symloc::kDefaultGraphCap;
  SchemeFlags graph_scheme;
  graph->add_option("--m", graph_m, "Group size")->required();
  graph->add_option("--mode", graph_mode, "Cover mode")
      ->check(CLI::IsMember({"weak", "bruhat"}))
      ->default_str("weak");
  graph->add_option("--annotate", graph_annotate, "Node annotation")
      ->check(CLI::IsMember({"none", "hits"}))
      ->default_str("none");
  graph->add_option("--cap", graph_cap, "Override the m! node-count cap");
  add_scheme_flags(graph, graph_scheme);
  graph->callback([&] {
    const auto g = symloc::build_graph(graph_m, parse_mode(graph_mode), graph_cap);
    const auto annotate = graph_annotate == "hits" ? symloc::NodeAnnotation::Hits
                                                   : symloc::NodeAnnotation::None;
    const bool with_labels = graph->count("--labeling") > 0;
    symloc::LabelScheme scheme;
    if (with_labels) scheme = make_scheme(graph_scheme, graph_m);
    std::cout << symloc::dot_export(g, annotate, with_labels ? &scheme : nullptr);
  });

  // verify: exhaustive property checks
  auto* verify = app.add_subcommand("verify", "Run exhaustive property checks");
  int verify_m = 0;
  std::vector<std::string> verify_checks;
  std::string verify_mode = "bruhat";
  bool expect_known = false;
  SchemeFlags verify_scheme;
  verify->add_option("--m", verify_m, "Group size")->required();
  verify->add_option("--check", verify_checks, "Checks: good, el, delta, bruhat-equiv, oracle")
      ->required()
      ->delimiter(',');
  add_scheme_flags(verify, verify_scheme);
  verify->add_option("--mode", verify_mode, "Cover mode for the el check")
      ->check(CLI::IsMember({"weak", "bruhat"}))
      ->default_str("bruhat");
  verify->add_flag("--expect-known-violations", expect_known,
                   "Report violations without a failing exit code");
  verify->callback([&] {
    json out;
    out["m"] = verify_m;
    json checks = json::array();
    bool all_hold = true;
    for (const std::string& name : verify_checks) {
      json check;
      if (name == "good")
        check = good_check_json(verify_scheme, verify_m);
      else if (name == "el")
        check = el_check_json(verify_scheme, verify_m, verify_mode);
      else if (name == "delta")
        check = delta_check_json(verify_m);
      else if (name == "bruhat-equiv")
        check = bruhat_equiv_check_json(verify_m);
      else if (name == "oracle")
        check = oracle_check_json(verify_m);
      else
        throw std::runtime_error("unknown check '" + name + "'");
      all_hold = all_hold && check["holds"].get<bool>();
      checks.push_back(std::move(check));
    }
    out["checks"] = std::move(checks);
    out["all_hold"] = all_hold;
    std::cout << out.dump(2) << "\n";
    if (!all_hold && !expect_known) exit_code = 1;
  });

  // reuse: matrix re-traversal reuse totals
  auto* reuse = app.add_subcommand("reuse", "Cyclic vs sawtooth matrix re-traversal reuse");
  std::uint64_t reuse_rows = 0;
  std::uint64_t reuse_cols = 0;
  reuse->add_option("--rows", reuse_rows, "Matrix rows")->required();
  reuse->add_option("--cols", reuse_cols, "Matrix columns")->required();
  reuse->callback([&] {
    std::cout << symloc::reuse_report_json(symloc::reuse_report(reuse_rows, reuse_cols)).dump(2)
              << "\n";
  });

  // table: exhaustive hit table CSV
  auto* table = app.add_subcommand("table", "Hit table of all of S_m as CSV");
  int table_m = 0;
  table->add_option("--m", table_m, "Group size")->required();
  table->callback([&] { std::cout << symloc::hit_table_csv(table_m); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
