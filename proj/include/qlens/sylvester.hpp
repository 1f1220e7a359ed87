#pragma once
// Shift-Sylvester equations S^p Y - Y S^q = Z over the integers, solved by
// column propagation from a prescribed first column, and the deterministic
// intertwiner construction (zero shift exponents, zero first columns,
// support restricted to the dominance pattern).

#include <optional>

#include "qlens/blockmat.hpp"
#include "qlens/intmat.hpp"
#include "qlens/residue.hpp"

namespace qlens {

enum class SolveStatus { found, inconsistent, delta_obstruction };

const char* to_string(SolveStatus s);

struct SylvesterResult {
  SolveStatus status = SolveStatus::inconsistent;
  IntMat Y;
};

// Unique candidate for S^p Y - Y S^q = Z with first column y0, propagated
// column by column (q a unit), then verified in full. For p = q = 1 an
// unsolvable system is reported as delta_obstruction (the trace vector of Z
// is nonzero exactly then).
SylvesterResult solve_shift_sylvester(i64 r, i64 p, i64 q, const IntMat& Z,
                                      const std::vector<i64>& y0);

struct SolverResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::optional<BlockMat> H;
};

// Build H with diagonal blocks P_{n_c/m_c} and sub-diagonal blocks solved in
// order of increasing block depth, first columns fixed to zero; require every
// entry outside the dominance support to vanish; verify H B[m] = B[n] H by
// exact multiplication. Unequal gcd chains short-circuit to inconsistent.
// Throws std::invalid_argument on mismatched modulus or length.
SolverResult solve_condition_vii(const WeightVector& m, const WeightVector& n);

}  // namespace qlens
