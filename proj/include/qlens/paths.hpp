#pragma once
// Admissible generator paths between levels, their length multisets (raw and
// reduced mod r), the closed form for level pairs, a transfer-matrix counting
// route, the three-level decomposition, and explicit pairing certificates for
// two-level weight vectors.

#include <optional>
#include <utility>
#include <vector>

#include "qlens/residue.hpp"

namespace qlens {

// A path from the first chain level to the last: dwell loops[p] times at
// chain[p], then jump one level. Its lift into the skew product starts and
// ends at residue 0 and avoids residue 0 strictly in between.
struct AdmissiblePath {
  std::vector<int> chain;   // strictly increasing levels, >= 2 entries
  std::vector<i64> loops;   // same size, each in 0..r-1
  i64 length = 0;           // sum of loops + number of jumps
  bool operator==(const AdmissiblePath&) const = default;
};

// All admissible paths from level s to level t, over every intermediate level
// subset. Throws std::invalid_argument unless 1 <= s < t <= k+1.
std::vector<AdmissiblePath> enumerate_admissible(const WeightVector& w, int s, int t);

// counts[l % r] over a path list.
std::vector<i64> count_residues(const std::vector<AdmissiblePath>& paths, i64 r);

// Level-pair closed form: residues 0, g, 2g, ... each g times, g = gcd(m2-m1, r).
std::vector<i64> pair_multiset_closed_form(i64 r, i64 m1, i64 m2);

// Per level pair (s, t), s < t in lexicographic order: counts of path lengths
// mod r. Raw lengths are kept only for two-level weight vectors, where the
// pairing certificate needs them.
struct PathMultiset {
  i64 r = 0;
  std::vector<std::pair<std::pair<int, int>, std::vector<i64>>> counts;
  std::vector<i64> raw_lengths;  // sorted; only when k == 1

  const std::vector<i64>* find(int s, int t) const;
  bool operator==(const PathMultiset& o) const { return r == o.r && counts == o.counts; }
};

PathMultiset multiset_wbar(const WeightVector& w);

// Reduced multisets agree for every level pair. Throws std::invalid_argument
// on mismatched modulus or length.
bool wbar_equal(const WeightVector& m, const WeightVector& n);

// For a three-level vector and outer dwell counts (t1, t3): the unique middle
// dwells with m1(t1+1) + m2*t2p = 0 and m2(t2pp+1) + m3*t3 = 0 mod r.
// The combined middle dwell t2 = t2p + t2pp mod r gives one indecomposable
// path exactly when t2p + t2pp >= r.
struct TriplePathDecomposition {
  i64 t2p = 0, t2pp = 0, t2 = 0;
  bool admissible = false;
};
TriplePathDecomposition triple_decompose(const WeightVector& w, i64 t1, i64 t3);

// Same counts as enumerate_admissible, via per-level polynomial transfer
// vectors with lengths tracked mod x^r - 1.
std::vector<i64> transfer_count(const WeightVector& w, int s, int t);

// Lengths of the r two-level paths for weights (m1, m2), indexed by the
// first-level dwell count: X_i = i + 1 + ((-(i+1) * m1 / m2) mod r).
std::vector<i64> xi_sequence(i64 r, i64 m1, i64 m2);

// One generator-pairing entry: the path of m maps to the path of n padded by
// ell full bottom-level cycles (ell = (|from| - |to|) / r).
struct CertEntry {
  AdmissiblePath from, to;
  i64 ell = 0;
};

// Bijection between the r paths of two two-level weight vectors matching
// lengths mod r. Throws std::invalid_argument("no equivariant pairing exists")
// when the reduced multisets differ.
std::vector<CertEntry> d3_certificate(const WeightVector& m, const WeightVector& n);

}  // namespace qlens
