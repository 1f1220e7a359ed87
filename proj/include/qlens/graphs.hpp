#pragma once
// Graphs attached to a weight vector: the base graph with one vertex per
// level, its Z/r skew product, the truncated translation graph, the
// (level, residue) poset with Hasse diagram and positive-cone test, and
// deterministic DOT export.

#include <string>
#include <vector>

#include "qlens/residue.hpp"

namespace qlens {

struct DirectedGraph {
  std::vector<std::string> vertices;
  struct Edge {
    int src = 0;
    int dst = 0;
    std::string label;
  };
  std::vector<Edge> edges;
};

// k+1 vertices v_1..v_{k+1}; one edge e_ij for every 1 <= i <= j <= k+1.
DirectedGraph build_sphere_graph(int k);

// Vertices (v_i, l) over l in Z/r; every base edge e_ij lifts to the r edges
// (v_i, l - m_i) -> (v_j, l). Each level's loop edges form one r-cycle
// stepping by m_i.
DirectedGraph build_skew_product(const WeightVector& w);

struct SkewVertex {
  int level = 1;    // 1..k+1
  i64 residue = 0;  // canonical in 0..r-1
  bool operator==(const SkewVertex&) const = default;
};

// Partial order on (level, residue) pairs: a >= b iff a == b, or
// a.level < b.level and gcd(r, d_i, ..., d_{i'-1}) divides the residue
// difference, where d_t = gcd(m_{t+1} - m_t, r), i = a.level, i' = b.level.
// (Chains through intermediate levels interpolate to this divisibility test,
// so the relation is already its own reflexive-transitive closure.)
bool dominates(const WeightVector& w, const SkewVertex& a, const SkewVertex& b);

struct Poset0 {
  WeightVector w;
  // Residues present per level (index 0 = level 1), sorted ascending.
  std::vector<std::vector<i64>> level_residues;
  struct HasseEdge {
    SkewVertex upper, lower;  // lower.level == upper.level + 1
  };
  std::vector<HasseEdge> hasse;
};

// Elements dominated by some (i, 0), with Hasse edges between consecutive
// levels only. A level-i element has r/d_i immediate successors at level i+1.
Poset0 build_poset0(const WeightVector& w);

// Membership of an integer vector (flat index (i-1)*r + j) in the cone:
// each coordinate is nonnegative, or some strictly positive coordinate sits
// at a pair dominating it.
bool is_positive_cone(const std::vector<i64>& x, const Poset0& p);

// r + k + 1: enough columns for every stable line to appear.
int default_truncation_depth(const WeightVector& w);

// Forward-reachable part of the translation graph over columns 0..depth,
// seeded at ((v_i, 0), 0) for every level i. Edges push one column to the
// right. Throws std::invalid_argument("depth too small") when depth < k+1.
DirectedGraph build_truncated_translation(const WeightVector& w, int depth);

// Per level, the sorted line parameters (entry residue - column * weight,
// mod r) present at the final column of the truncated translation graph.
// For depth >= r+k+1 this is exactly the level slice of the poset above.
std::vector<std::vector<i64>> stable_lines(const WeightVector& w, int depth);

std::string export_dot(const DirectedGraph& g, const std::string& name = "G");
std::string export_dot(const Poset0& p);

}  // namespace qlens
