#include "qlens/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlens {

namespace {

std::string sphere_vertex_name(int i) { return "v" + std::to_string(i); }

std::string skew_vertex_name(int i, i64 l) {
  return "(v" + std::to_string(i) + "," + std::to_string(l) + ")";
}

std::string edge_label(int i, int j) {
  return "e" + std::to_string(i) + std::to_string(j);
}

}  // namespace

DirectedGraph build_sphere_graph(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  DirectedGraph g;
  for (int i = 1; i <= k + 1; ++i) g.vertices.push_back(sphere_vertex_name(i));
  for (int i = 1; i <= k + 1; ++i) {
    for (int j = i; j <= k + 1; ++j) {
      g.edges.push_back({i - 1, j - 1, edge_label(i, j)});
    }
  }
  return g;
}

DirectedGraph build_skew_product(const WeightVector& w) {
  const i64 r = w.r;
  DirectedGraph g;
  for (int i = 1; i <= w.levels(); ++i) {
    for (i64 l = 0; l < r; ++l) g.vertices.push_back(skew_vertex_name(i, l));
  }
  auto vid = [&](int i, i64 l) { return (i - 1) * static_cast<int>(r) + static_cast<int>(l); };
  for (int i = 1; i <= w.levels(); ++i) {
    for (int j = i; j <= w.levels(); ++j) {
      for (i64 l = 0; l < r; ++l) {
        i64 src_res = mod_reduce(l - w.weights[i - 1], r);
        g.edges.push_back({vid(i, src_res), vid(j, l),
                           "(" + edge_label(i, j) + "," + std::to_string(l) + ")"});
      }
    }
  }
  return g;
}

bool dominates(const WeightVector& w, const SkewVertex& a, const SkewVertex& b) {
  if (a.level < 1 || a.level > w.levels() || b.level < 1 || b.level > w.levels())
    throw std::invalid_argument("level out of range");
  i64 ja = mod_reduce(a.residue, w.r), jb = mod_reduce(b.residue, w.r);
  if (a.level == b.level) return ja == jb;
  if (a.level > b.level) return false;
  auto chain = ideal_invariant(w);
  i64 g = w.r;
  for (int t = a.level; t < b.level; ++t) g = std::gcd(g, chain[t - 1]);
  return mod_reduce(jb - ja, g) == 0;
}

Poset0 build_poset0(const WeightVector& w) {
  Poset0 p{w, {}, {}};
  const i64 r = w.r;
  p.level_residues.resize(w.levels());
  for (int i = 1; i <= w.levels(); ++i) {
    for (i64 j = 0; j < r; ++j) {
      for (int top = 1; top <= i; ++top) {
        if (dominates(w, {top, 0}, {i, j})) {
          p.level_residues[i - 1].push_back(j);
          break;
        }
      }
    }
  }
  auto chain = ideal_invariant(w);
  for (int i = 1; i < w.levels(); ++i) {
    for (i64 j : p.level_residues[i - 1]) {
      for (i64 j2 : p.level_residues[i]) {
        if (mod_reduce(j2 - j, chain[i - 1]) == 0) {
          p.hasse.push_back({{i, j}, {i + 1, j2}});
        }
      }
    }
  }
  return p;
}

bool is_positive_cone(const std::vector<i64>& x, const Poset0& p) {
  const WeightVector& w = p.w;
  const i64 r = w.r;
  if (x.size() != static_cast<size_t>(w.levels()) * static_cast<size_t>(r))
    throw std::invalid_argument("vector length must be (k+1)*r");
  auto entry = [&](int i, i64 j) { return x[(i - 1) * r + j]; };
  for (int i = 1; i <= w.levels(); ++i) {
    for (i64 j = 0; j < r; ++j) {
      if (entry(i, j) >= 0) continue;
      bool dominated = false;
      for (int i2 = 1; i2 <= i && !dominated; ++i2) {
        for (i64 j2 = 0; j2 < r && !dominated; ++j2) {
          if (entry(i2, j2) > 0 && dominates(w, {i2, j2}, {i, j})) dominated = true;
        }
      }
      if (!dominated) return false;
    }
  }
  return true;
}

int default_truncation_depth(const WeightVector& w) {
  return static_cast<int>(w.r) + w.k() + 1;
}

namespace {

struct TranslationVertex {
  int column;
  int level;
  i64 residue;
  auto operator<=>(const TranslationVertex&) const = default;
};

// Reachable vertex set of the truncated translation graph.
std::set<TranslationVertex> translation_reachable(const WeightVector& w, int depth) {
  std::set<TranslationVertex> seen;
  std::vector<TranslationVertex> frontier;
  for (int i = 1; i <= w.levels(); ++i) {
    TranslationVertex v{0, i, 0};
    seen.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<TranslationVertex> next;
    for (const auto& v : frontier) {
      if (v.column >= depth) continue;
      for (int j = v.level; j <= w.levels(); ++j) {
        TranslationVertex u{v.column + 1, j, mod_reduce(v.residue + w.weights[v.level - 1], w.r)};
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

DirectedGraph build_truncated_translation(const WeightVector& w, int depth) {
  if (depth < w.levels()) throw std::invalid_argument("depth too small");
  auto seen = translation_reachable(w, depth);

  DirectedGraph g;
  std::map<TranslationVertex, int> index;
  std::vector<TranslationVertex> ordered(seen.begin(), seen.end());
  std::sort(ordered.begin(), ordered.end());
  for (const auto& v : ordered) {
    index[v] = static_cast<int>(g.vertices.size());
    g.vertices.push_back("(" + skew_vertex_name(v.level, v.residue) + "," +
                         std::to_string(v.column) + ")");
  }
  for (const auto& v : ordered) {
    if (v.column >= depth) continue;
    for (int j = v.level; j <= w.levels(); ++j) {
      i64 res = mod_reduce(v.residue + w.weights[v.level - 1], w.r);
      TranslationVertex u{v.column + 1, j, res};
      if (seen.count(u)) {
        g.edges.push_back({index[v], index[u],
                           "(" + edge_label(v.level, j) + "," + std::to_string(res) + ")"});
      }
    }
  }
  return g;
}

std::vector<std::vector<i64>> stable_lines(const WeightVector& w, int depth) {
  if (depth < w.levels()) throw std::invalid_argument("depth too small");
  auto seen = translation_reachable(w, depth);
  std::vector<std::set<i64>> lines(w.levels());
  for (const auto& v : seen) {
    if (v.column != depth) continue;
    i64 c = mod_reduce(v.residue - static_cast<i64>(v.column) * w.weights[v.level - 1], w.r);
    lines[v.level - 1].insert(c);
  }
  std::vector<std::vector<i64>> out;
  for (auto& s : lines) out.emplace_back(s.begin(), s.end());
  return out;
}

std::string export_dot(const DirectedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& e : g.edges) {
    os << "  \"" << g.vertices[e.src] << "\" -> \"" << g.vertices[e.dst] << "\"";
    if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const Poset0& p) {
  std::ostringstream os;
  os << "digraph \"P0\" {\n";
  for (int i = 1; i <= p.w.levels(); ++i) {
    for (i64 j : p.level_residues[i - 1]) {
      os << "  \"(" << i << "," << j << ")\";\n";
    }
  }
  for (const auto& e : p.hasse) {
    os << "  \"(" << e.upper.level << "," << e.upper.residue << ")\" -> \"(" << e.lower.level
       << "," << e.lower.residue << ")\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qlens
