#include "qlens/sylvester.hpp"

#include <stdexcept>

#include "qlens/graphs.hpp"

namespace qlens {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::inconsistent: return "inconsistent";
    case SolveStatus::delta_obstruction: return "delta_obstruction";
  }
  return "?";
}

SylvesterResult solve_shift_sylvester(i64 r, i64 p, i64 q, const IntMat& Z,
                                      const std::vector<i64>& y0) {
  if (Z.n != r) throw std::invalid_argument("matrix size mismatch");
  if (y0.size() != static_cast<size_t>(r)) throw std::invalid_argument("column length must be r");
  if (!is_unit(q, r) || !is_unit(p, r)) throw std::invalid_argument("not a unit mod r");

  // Column j of the equation reads S^p col_j - col_{j-q} = Z_j, so from a
  // known column b: col_{b+q} = S^{-p} (col_b + Z_{b+q}). q being a unit
  // makes the walk visit every column.
  std::vector<std::vector<i64>> cols(r);
  cols[0] = y0;
  i64 cur = 0;
  for (i64 step = 0; step + 1 < r; ++step) {
    i64 nxt = mod_reduce(cur + q, r);
    std::vector<i64> v(r);
    for (i64 i = 0; i < r; ++i) {
      v[i] = cols[cur][i] + Z.at(static_cast<int>(i), static_cast<int>(nxt));
    }
    std::vector<i64> shifted(r);
    for (i64 i = 0; i < r; ++i) shifted[i] = v[mod_reduce(i - p, r)];
    cols[nxt] = std::move(shifted);
    cur = nxt;
  }

  IntMat Y(static_cast<int>(r));
  for (i64 j = 0; j < r; ++j) {
    for (i64 i = 0; i < r; ++i) Y.at(static_cast<int>(i), static_cast<int>(j)) = cols[j][i];
  }
  IntMat lhs = shift_matrix(r, p) * Y - Y * shift_matrix(r, q);
  if (lhs == Z) return {SolveStatus::found, Y};
  bool unit_case = mod_reduce(p, r) == 1 && mod_reduce(q, r) == 1;
  return {unit_case ? SolveStatus::delta_obstruction : SolveStatus::inconsistent, IntMat{}};
}

SolverResult solve_condition_vii(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != n.levels())
    throw std::invalid_argument("weight vectors must share modulus and length");
  const i64 r = m.r;
  const int levels = m.levels();
  if (ideal_invariant(m) != ideal_invariant(n)) return {SolveStatus::inconsistent, std::nullopt};

  BlockMat H(levels, r);
  for (int c = 0; c < levels; ++c) {
    H.at(c, c) = perm_matrix(r, mod_div(n.weights[c], m.weights[c], r));
  }
  const std::vector<i64> zero_col(r, 0);
  for (int depth = 1; depth < levels; ++depth) {
    for (int a = depth; a < levels; ++a) {
      int b = a - depth;
      IntMat Z(static_cast<int>(r));
      for (int c = b; c < a; ++c) Z = Z + shift_matrix(r, n.weights[a]) * H.at(c, b);
      for (int c = b + 1; c <= a; ++c) Z = Z - H.at(a, c) * shift_matrix(r, m.weights[c]);
      auto sol = solve_shift_sylvester(r, n.weights[a], m.weights[b], Z, zero_col);
      if (sol.status != SolveStatus::found) return {SolveStatus::inconsistent, std::nullopt};
      for (i64 i = 0; i < r; ++i) {
        for (i64 j = 0; j < r; ++j) {
          if (sol.Y.at(static_cast<int>(i), static_cast<int>(j)) != 0 &&
              !dominates(m, {b + 1, j}, {a + 1, i})) {
            return {SolveStatus::inconsistent, std::nullopt};
          }
        }
      }
      H.at(a, b) = std::move(sol.Y);
    }
  }
  if (block_mul(H, build_B(m)) != block_mul(build_B(n), H)) {
    return {SolveStatus::inconsistent, std::nullopt};
  }
  return {SolveStatus::found, std::move(H)};
}

}  // namespace qlens
