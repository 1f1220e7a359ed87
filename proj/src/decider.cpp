#include "qlens/decider.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "qlens/dqsearch.hpp"
#include "qlens/sylvester.hpp"

namespace qlens {

namespace {

using Window = std::array<i64, 4>;

bool all_distinct(const std::vector<i64>& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) return false;
    }
  }
  return true;
}

bool window_distinct(const Window& w) {
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = i + 1; j < 4; ++j) {
      if (w[i] == w[j]) return false;
    }
  }
  return true;
}

Window rescaled_window(const WeightVector& w, int pos) {
  i64 inv = mod_inverse(w.weights[pos], w.r);
  Window out{};
  for (int t = 0; t < 4; ++t) out[t] = mod_reduce(w.weights[pos + t] * inv, w.r);
  return out;
}

bool pair_is(const Window& a, const Window& b, const Window& x, const Window& y) {
  return (a == x && b == y) || (a == y && b == x);
}

char window_type(i64 r, const Window& a, const Window& b) {
  if (r == 5) {
    if (window_distinct(a) && window_distinct(b)) return '0';
    if (pair_is(a, b, {1, 2, 3, 1}, {1, 3, 2, 1})) return '1';
    if (pair_is(a, b, {1, 3, 4, 1}, {1, 4, 3, 1})) return '2';
    if (pair_is(a, b, {1, 2, 4, 1}, {1, 4, 2, 1})) return '3';
  } else {
    if (pair_is(a, b, {1, 3, 5, 7}, {1, 7, 5, 3}) || pair_is(a, b, {1, 3, 7, 5}, {1, 7, 3, 5}) ||
        pair_is(a, b, {1, 5, 3, 7}, {1, 5, 7, 3})) {
      return '0';
    }
    if (pair_is(a, b, {1, 3, 7, 1}, {1, 7, 3, 1})) return '1';
  }
  throw std::invalid_argument("unclassified window");
}

void require_same_shape(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != n.levels())
    throw std::invalid_argument("weight vectors must share modulus and length");
}

// Fill the pattern fields of a report whose (VII) verdict is already known.
void attach_pattern(ConditionReport& rep) {
  if (!rep.cond_vii || rep.m.levels() < 4) return;
  if (rep.m.r != 5 && rep.m.r != 8) return;
  if (is_unit_multiple(rep.m, rep.n)) return;
  try {
    rep.pattern = extract_pattern(normalize_weights(rep.m), normalize_weights(rep.n));
  } catch (const std::invalid_argument&) {
    rep.unclassified_window = true;
  }
}

void run_extended(ConditionReport& rep, unsigned long long budget) {
  if (rep.cond_vii) {
    // The deterministic witness is unimodular, so it already realizes the
    // relaxed form of the condition.
    rep.extended_iv = TriState::yes;
    return;
  }
  if (budget == 0) return;
  auto constrained = exhaustive_dq_search(rep.m, rep.n, budget, true);
  if (constrained.status == SolveStatus::found) {
    rep.extended_iv = TriState::yes;
    rep.dq1_witness = TriState::yes;
    return;
  }
  auto relaxed = exhaustive_dq_search(rep.m, rep.n, budget, false);
  if (relaxed.status == SolveStatus::found) {
    rep.extended_iv = TriState::yes;
  } else if (relaxed.exhausted) {
    rep.extended_iv = TriState::no;
  } else {
    rep.extended_truncated = true;
  }
}

nlohmann::ordered_json report_json_object(const ConditionReport& rep) {
  nlohmann::ordered_json j;
  j["r"] = rep.m.r;
  j["k"] = rep.m.k();
  j["m"] = rep.m.weights;
  j["n"] = rep.n.weights;
  j["cond_v"] = rep.cond_v;
  j["cond_vi"] = rep.cond_vi;
  j["cond_vii"] = rep.cond_vii;
  auto tri = [](TriState s) -> nlohmann::ordered_json {
    if (s == TriState::skipped) return "skipped";
    return s == TriState::yes;
  };
  j["dq1_witness"] = tri(rep.dq1_witness);
  j["extended_iv"] = tri(rep.extended_iv);
  if (rep.extended_truncated) j["extended_truncated"] = true;
  if (rep.pattern) j["pattern"] = *rep.pattern;
  if (rep.unclassified_window) j["unclassified_window"] = true;
  return j;
}

nlohmann::ordered_json path_json(const AdmissiblePath& p) {
  return {{"chain", p.chain}, {"loops", p.loops}, {"length", p.length}};
}

}  // namespace

const char* to_string(TriState s) {
  switch (s) {
    case TriState::no: return "no";
    case TriState::yes: return "yes";
    case TriState::skipped: return "skipped";
  }
  return "?";
}

ConditionReport::ConditionReport(WeightVector m_, WeightVector n_)
    : m(std::move(m_)), n(std::move(n_)) {}

D3Decision decide_d3(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != 2 || n.levels() != 2)
    throw std::invalid_argument("pairing needs two-level weight vectors over one modulus");
  D3Decision out;
  out.equivalent = ideal_invariant(m) == ideal_invariant(n);
  if (out.equivalent) out.certificate = d3_certificate(m, n);
  return out;
}

bool decide_d5_prime(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != 3 || n.levels() != 3)
    throw std::invalid_argument("need three-level weight vectors over one modulus");
  if (!is_prime(m.r)) throw std::invalid_argument("theorem scope");
  return (all_distinct(m.weights) && all_distinct(n.weights)) || is_unit_multiple(m, n);
}

bool condition_vi(const WeightVector& m, const WeightVector& n) {
  require_same_shape(m, n);
  if (is_unit_multiple(m, n)) return true;
  return all_distinct(m.weights) && all_distinct(n.weights) &&
         ideal_invariant(m) == ideal_invariant(n);
}

ConditionReport compare_conditions(const WeightVector& m, const WeightVector& n,
                                   unsigned long long extended_budget) {
  require_same_shape(m, n);
  ConditionReport rep(m, n);
  rep.cond_v = wbar_equal(m, n);
  rep.cond_vi = condition_vi(m, n);
  auto vii = solve_condition_vii(m, n);
  rep.cond_vii = vii.status == SolveStatus::found;
  if (vii.H) rep.dq1_witness = check_dq1_witness(*vii.H) ? TriState::yes : TriState::no;
  if (extended_budget > 0 || rep.cond_vii) run_extended(rep, extended_budget);
  attach_pattern(rep);
  return rep;
}

std::string extract_pattern(const WeightVector& m, const WeightVector& n) {
  require_same_shape(m, n);
  if (m.r != 5 && m.r != 8) throw std::invalid_argument("pattern table known for moduli 5 and 8");
  if (m.levels() < 4) throw std::invalid_argument("pattern needs at least four levels");
  std::string out;
  for (int pos = 0; pos + 4 <= m.levels(); ++pos) {
    out.push_back(window_type(m.r, rescaled_window(m, pos), rescaled_window(n, pos)));
  }
  return out;
}

bool pattern_in_language(const std::string& p, i64 r) {
  if (r != 5 && r != 8) throw std::invalid_argument("pattern language defined for moduli 5 and 8");
  const char last = (r == 5) ? '3' : '1';
  for (char c : p) {
    if (c < '0' || c > last) throw std::invalid_argument("invalid pattern symbol");
  }
  static const std::regex lang5("0*|0*1|0*(10(00)*)*0*|0*20*|0*30*");
  static const std::regex lang8("0*|0*1|0*(10(00)*)*0*");
  const std::regex& lang = (r == 5) ? lang5 : lang8;
  if (std::regex_match(p, lang)) return true;
  std::string rev(p.rbegin(), p.rend());
  return std::regex_match(rev, lang);
}

std::vector<WeightVector> normalized_tuples(i64 r, int k) {
  if (k < 1) throw std::invalid_argument("weight vector needs at least 2 weights");
  std::vector<i64> units;
  for (i64 u = 1; u < r; ++u) {
    if (is_unit(u, r)) units.push_back(u);
  }
  std::vector<WeightVector> out;
  std::vector<size_t> idx(static_cast<size_t>(k), 0);
  while (true) {
    std::vector<i64> w(static_cast<size_t>(k) + 1, 1);
    for (int t = 0; t < k; ++t) w[static_cast<size_t>(t) + 1] = units[idx[static_cast<size_t>(t)]];
    out.emplace_back(r, std::move(w));
    int pos = k - 1;
    while (pos >= 0) {
      if (++idx[static_cast<size_t>(pos)] < units.size()) break;
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

SearchResult search_pairs(i64 r, int k, const SearchOptions& opt) {
  SearchResult out;
  auto tuples = normalized_tuples(r, k);
  const size_t T = tuples.size();
  out.tuples = T;

  std::vector<std::vector<i64>> chains;
  std::vector<PathMultiset> wbars;
  chains.reserve(T);
  wbars.reserve(T);
  for (const auto& w : tuples) {
    chains.push_back(ideal_invariant(w));
    wbars.push_back(multiset_wbar(w));
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < T; ++i) {
    for (size_t j = i + 1; j < T; ++j) pairs.emplace_back(i, j);
  }
  size_t limit = pairs.size();
  if (opt.pair_budget != 0 && opt.pair_budget < limit) {
    limit = static_cast<size_t>(opt.pair_budget);
    out.truncated = true;
  }
  out.pairs_examined = limit;

  std::vector<std::optional<ConditionReport>> slots(limit);
  std::atomic<size_t> next{0};
  std::mutex err_mtx;
  std::exception_ptr first_error;

  auto evaluate = [&](size_t idx) {
    const auto [i, j] = pairs[idx];
    const WeightVector& m = tuples[i];
    const WeightVector& n = tuples[j];
    ConditionReport rep(m, n);
    rep.cond_v = wbars[i] == wbars[j];
    rep.cond_vi = condition_vi(m, n);
    if (chains[i] == chains[j]) {
      auto vii = solve_condition_vii(m, n);
      rep.cond_vii = vii.status == SolveStatus::found;
      if (vii.H) rep.dq1_witness = check_dq1_witness(*vii.H) ? TriState::yes : TriState::no;
    }
    bool emit = (opt.cond_v && rep.cond_v) || (opt.cond_vi && rep.cond_vi) ||
                (opt.cond_vii && rep.cond_vii);
    if (!emit) return;
    if (opt.extended_budget > 0 || rep.cond_vii) run_extended(rep, opt.extended_budget);
    attach_pattern(rep);
    slots[idx] = std::move(rep);
  };

  auto worker = [&] {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= limit) return;
      try {
        evaluate(idx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  unsigned nworkers = opt.workers > 0 ? static_cast<unsigned>(opt.workers)
                                      : std::max(1u, std::thread::hardware_concurrency());
  if (nworkers <= 1 || limit <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (auto& slot : slots) {
    if (slot) out.reports.push_back(std::move(*slot));
  }
  return out;
}

std::string report_to_json(const ConditionReport& rep) { return report_json_object(rep).dump(); }

std::string reports_to_csv(const std::vector<ConditionReport>& reps) {
  std::ostringstream os;
  os << "r,k,m,n,cond_v,cond_vi,cond_vii,dq1_witness,extended_iv,pattern\n";
  auto join = [](const std::vector<i64>& v) {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s << ' ';
      s << v[i];
    }
    return s.str();
  };
  for (const auto& rep : reps) {
    os << rep.m.r << ',' << rep.m.k() << ',' << join(rep.m.weights) << ',' << join(rep.n.weights)
       << ',' << (rep.cond_v ? "true" : "false") << ',' << (rep.cond_vi ? "true" : "false") << ','
       << (rep.cond_vii ? "true" : "false") << ',' << to_string(rep.dq1_witness) << ','
       << to_string(rep.extended_iv) << ',';
    if (rep.pattern) {
      os << *rep.pattern;
    } else if (rep.unclassified_window) {
      os << "unclassified";
    }
    os << '\n';
  }
  return os.str();
}

std::string h_to_json(const BlockMat& H) {
  nlohmann::ordered_json j;
  j["r"] = H.r;
  j["levels"] = H.levels;
  IntMat flat = H.flatten();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < flat.n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int jj = 0; jj < flat.n; ++jj) row.push_back(flat.at(i, jj));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

std::string multiset_to_json(const PathMultiset& ms) {
  nlohmann::ordered_json j;
  j["r"] = ms.r;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [st, counts] : ms.counts) {
    entries.push_back({{"from", st.first}, {"to", st.second}, {"counts", counts}});
  }
  j["pairs"] = std::move(entries);
  if (!ms.raw_lengths.empty()) j["raw_lengths"] = ms.raw_lengths;
  return j.dump();
}

std::string certificate_to_json(const std::vector<CertEntry>& cert) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : cert) {
    rows.push_back({{"from", path_json(e.from)}, {"to", path_json(e.to)}, {"ell", e.ell}});
  }
  return rows.dump();
}

}  // namespace qlens
