// Command-line front end: invariants of a weight vector, equivalence verdicts
// and condition reports for pairs, intertwiner construction and search,
// window patterns, pair sweeps, and DOT export of the attached graphs.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlens/decider.hpp"
#include "qlens/dqsearch.hpp"
#include "qlens/graphs.hpp"
#include "qlens/paths.hpp"
#include "qlens/sylvester.hpp"

namespace {

using qlens::i64;

struct Defaults {
  unsigned long long budget = 0;
  int workers = 0;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Precedence: built-in defaults < config file < environment < explicit flags.
// Flags are applied by CLI11 writing over these values only when present.
Defaults load_defaults(const std::string& config_path) {
  Defaults d;
  const std::string path = config_path.empty() ? "qlens.conf" : config_path;
  std::ifstream in(path);
  if (!in && !config_path.empty()) throw std::invalid_argument("config file not found");
  std::string line;
  while (in && std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line is not key=value");
    std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (key == "budget") {
      d.budget = std::stoull(val);
    } else if (key == "workers") {
      d.workers = std::stoi(val);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  if (const char* e = std::getenv("QLENS_BUDGET")) d.budget = std::stoull(e);
  if (const char* e = std::getenv("QLENS_WORKERS")) d.workers = std::stoi(e);
  return d;
}

std::string join_i64(const std::vector<i64>& v, char sep = ' ') {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

void print_report(const qlens::ConditionReport& rep) {
  std::cout << "cond V (path multisets):        " << (rep.cond_v ? "true" : "false") << "\n";
  std::cout << "cond VI (distinct chains/scale): " << (rep.cond_vi ? "true" : "false") << "\n";
  std::cout << "cond VII (intertwiner):         " << (rep.cond_vii ? "true" : "false") << "\n";
  std::cout << "dq1 witness:                    " << qlens::to_string(rep.dq1_witness) << "\n";
  std::cout << "extended IV:                    " << qlens::to_string(rep.extended_iv)
            << (rep.extended_truncated ? " (budget exhausted)" : "") << "\n";
  if (rep.pattern) std::cout << "pattern:                        " << *rep.pattern << "\n";
  if (rep.unclassified_window) std::cout << "pattern:                        unclassified window\n";
  std::cout << "report: " << qlens::report_to_json(rep) << "\n";
}

int run(std::vector<std::string> args) {
  // A bare "--" separates the two weight tuples of a pair subcommand; CLI11
  // sees it as a named option so flags may still follow the second tuple.
  bool seen = false;
  for (auto& a : args) {
    if (!seen && a == "--") {
      a = "--versus";
      seen = true;
    }
  }
  std::string config_path;
  for (size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--config") config_path = args[i + 1];
  }
  Defaults def = load_defaults(config_path);

  CLI::App app{"Exact invariants and equivalence checks for weighted cyclic quotients"};
  app.require_subcommand(1);
  app.add_option("--config", config_path, "key=value file with default budget/workers");

  i64 r = 0;
  std::vector<i64> mw, nw;
  unsigned long long budget = def.budget;
  int workers = def.workers;

  auto add_pair_options = [&](CLI::App* sub) {
    sub->add_option("r", r, "modulus")->required();
    sub->add_option("m", mw, "first weight tuple")->required();
    sub->add_option("--versus", nw, "second weight tuple (write it as: -- n1 n2 ...)")
        ->required();
  };

  auto* inv = app.add_subcommand("invariants", "gcd chain and path-length multisets");
  inv->add_option("r", r, "modulus")->required();
  inv->add_option("m", mw, "weight tuple")->required();
  inv->callback([&] {
    qlens::WeightVector w(r, mw);
    auto chain = qlens::ideal_invariant(w);
    auto ms = qlens::multiset_wbar(w);
    std::cout << "modulus: " << w.r << "\nweights: " << join_i64(w.weights) << "\n";
    std::cout << "gcd chain: " << join_i64(chain) << "\n";
    for (const auto& [st, counts] : ms.counts) {
      std::cout << "wbar " << st.first << "->" << st.second << ": " << join_i64(counts) << "\n";
    }
    std::cout << "json: {\"r\":" << w.r << ",\"weights\":[" << join_i64(w.weights, ',')
              << "],\"chain\":[" << join_i64(chain, ',')
              << "],\"wbar\":" << qlens::multiset_to_json(ms) << "}\n";
  });

  auto* dec = app.add_subcommand("decide", "equivalence verdict or condition report");
  add_pair_options(dec);
  dec->add_option("--budget", budget, "exponent-tuple budget for the extended search");
  dec->callback([&] {
    qlens::WeightVector m(r, mw), n(r, nw);
    if (m.levels() == 2 && n.levels() == 2) {
      auto d3 = qlens::decide_d3(m, n);
      std::cout << "verdict: " << (d3.equivalent ? "equivalent" : "not equivalent") << "\n";
      if (d3.equivalent)
        std::cout << "certificate: " << qlens::certificate_to_json(d3.certificate) << "\n";
      return;
    }
    if (m.levels() == 3 && n.levels() == 3 && qlens::is_prime(m.r) && m.r == n.r) {
      bool eq = qlens::decide_d5_prime(m, n);
      std::cout << "verdict: " << (eq ? "equivalent" : "not equivalent") << "\n";
      return;
    }
    std::cout << "no theorem covers this shape; reporting conditions\n";
    print_report(qlens::compare_conditions(m, n, budget));
  });

  auto* sol = app.add_subcommand("solve-h", "construct or search for an intertwiner");
  add_pair_options(sol);
  bool extended = false;
  sol->add_flag("--extended", extended, "search over diagonal shift exponents");
  sol->add_option("--budget", budget, "exponent-tuple budget (0 = unlimited)");
  sol->callback([&] {
    qlens::WeightVector m(r, mw), n(r, nw);
    auto res = qlens::solve_condition_vii(m, n);
    std::cout << "status: " << qlens::to_string(res.status) << "\n";
    if (res.H) {
      std::cout << "fixes residue-0 sum: " << (qlens::check_dq1_witness(*res.H) ? "yes" : "no")
                << "\n";
      std::cout << "h: " << qlens::h_to_json(*res.H) << "\n";
      return;
    }
    if (!extended) return;
    auto s1 = qlens::exhaustive_dq_search(m, n, budget, true);
    std::cout << "extended search (residue-0 sum fixed): ";
    if (s1.status == qlens::SolveStatus::found) {
      std::cout << "found at exponents " << join_i64(s1.ell) << " (tuples tried: "
                << s1.tuples_tried << ")\n";
      std::cout << "h: " << qlens::h_to_json(*s1.H) << "\n";
      return;
    }
    std::cout << (s1.budget_exceeded ? "budget exhausted" : "no witness") << " after "
              << s1.tuples_tried << " tuples" << (s1.note.empty() ? "" : " (" + s1.note + ")")
              << "\n";
    auto s0 = qlens::exhaustive_dq_search(m, n, budget, false);
    std::cout << "extended search (unconstrained): ";
    if (s0.status == qlens::SolveStatus::found) {
      std::cout << "found at exponents " << join_i64(s0.ell) << " (tuples tried: "
                << s0.tuples_tried << ")\n";
      std::cout << "h: " << qlens::h_to_json(*s0.H) << "\n";
    } else {
      std::cout << (s0.budget_exceeded ? "budget exhausted" : "no witness") << " after "
                << s0.tuples_tried << " tuples" << (s0.note.empty() ? "" : " (" + s0.note + ")")
                << "\n";
    }
  });

  auto* sea = app.add_subcommand("search", "sweep all normalized pairs for a modulus");
  int kk = 0;
  std::string conditions = "v,vi,vii", jsonl_path, csv_path;
  unsigned long long pair_budget = 0;
  sea->add_option("r", r, "modulus")->required();
  sea->add_option("k", kk, "number of weights minus one")->required();
  sea->add_option("--conditions", conditions, "comma list among v,vi,vii (emission criteria)");
  sea->add_option("--jsonl", jsonl_path, "write one JSON report per line to this file");
  sea->add_option("--csv", csv_path, "write a CSV summary to this file");
  sea->add_option("--budget", budget, "per-pair exponent-tuple budget for extended search");
  sea->add_option("--pair-budget", pair_budget, "examine at most this many pairs");
  sea->add_option("--workers", workers, "worker threads (0 = hardware concurrency)");
  sea->callback([&] {
    qlens::SearchOptions opt;
    opt.cond_v = opt.cond_vi = opt.cond_vii = false;
    std::stringstream ss(conditions);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (tok == "v") {
        opt.cond_v = true;
      } else if (tok == "vi") {
        opt.cond_vi = true;
      } else if (tok == "vii") {
        opt.cond_vii = true;
      } else if (!tok.empty()) {
        throw std::invalid_argument("unknown condition: " + tok);
      }
    }
    if (!opt.cond_v && !opt.cond_vi && !opt.cond_vii)
      throw std::invalid_argument("no conditions requested");
    opt.extended_budget = budget;
    opt.pair_budget = pair_budget;
    opt.workers = workers;
    auto res = qlens::search_pairs(r, kk, opt);
    if (!jsonl_path.empty()) {
      std::ofstream out(jsonl_path);
      if (!out) throw std::runtime_error("cannot open " + jsonl_path);
      for (const auto& rep : res.reports) out << qlens::report_to_json(rep) << "\n";
    } else {
      for (const auto& rep : res.reports) std::cout << qlens::report_to_json(rep) << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw std::runtime_error("cannot open " + csv_path);
      out << qlens::reports_to_csv(res.reports);
    }
    std::cout << "tuples: " << res.tuples << "\npairs examined: " << res.pairs_examined
              << (res.truncated ? " (truncated)" : "") << "\nreports: " << res.reports.size()
              << "\n";
  });

  auto* pat = app.add_subcommand("pattern", "window pattern of a pair and language check");
  add_pair_options(pat);
  pat->callback([&] {
    qlens::WeightVector m(r, mw), n(r, nw);
    std::string p;
    try {
      p = qlens::extract_pattern(qlens::normalize_weights(m), qlens::normalize_weights(n));
    } catch (const std::invalid_argument& e) {
      if (std::string(e.what()) == "unclassified window") {
        std::cout << "pattern: unclassified window (pair leaves the table)\n";
        return;
      }
      throw;
    }
    std::cout << "pattern: " << p << "\n";
    std::cout << "in language: " << (qlens::pattern_in_language(p, m.r) ? "yes" : "no") << "\n";
  });

  auto* dot = app.add_subcommand("export-dot", "DOT source for the attached graphs");
  std::string graph = "skew", out_path;
  int depth = -1;
  dot->add_option("r", r, "modulus")->required();
  dot->add_option("m", mw, "weight tuple")->required();
  dot->add_option("--graph", graph, "skew | f | hasse")
      ->check(CLI::IsMember({"skew", "f", "hasse"}));
  dot->add_option("--depth", depth, "truncation depth for the translation graph");
  dot->add_option("--out", out_path, "write DOT here instead of stdout");
  dot->callback([&] {
    qlens::WeightVector w(r, mw);
    std::string src;
    if (graph == "skew") {
      src = qlens::export_dot(qlens::build_skew_product(w), "skew");
    } else if (graph == "f") {
      int d = depth >= 0 ? depth : qlens::default_truncation_depth(w);
      src = qlens::export_dot(qlens::build_truncated_translation(w, d), "translation");
    } else {
      src = qlens::export_dot(qlens::build_poset0(w));
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << src;
    } else {
      std::cout << src;
    }
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(std::move(args));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
