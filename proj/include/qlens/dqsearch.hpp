#pragma once
// Exhaustive intertwiner search over all diagonal shift exponents: for each
// exponent tuple the sub-diagonal blocks become affine expressions in their
// free first columns, and the intertwining closure, the dominance-support
// pattern, and (optionally) the distinguished-vector constraint form an
// integer linear system whose solvability is decided exactly.

#include <map>
#include <optional>
#include <string>

#include "qlens/sylvester.hpp"

namespace qlens {

// c + sum over (var -> coeff) of coeff * y_var.
struct Affine {
  i64 c = 0;
  std::map<int, i64> v;
};

// Decide c_row + A y = 0 over the integers; returns a solution when one
// exists (column echelon elimination with a tracked unimodular transform).
std::optional<std::vector<i64>> solve_integer_system(const std::vector<Affine>& rows, int nvars);

struct DqSearchOutcome {
  SolveStatus status = SolveStatus::inconsistent;
  bool exhausted = false;         // full iteration finished without a witness
  bool budget_exceeded = false;   // stopped early, verdict incomplete
  unsigned long long tuples_tried = 0;
  std::vector<i64> ell;           // witness exponents when found
  std::optional<BlockMat> H;      // witness, re-verified by multiplication
  std::string note;
};

// Iterate exponent tuples in lexicographic order; report the first witness.
// budget = 0 means unlimited; otherwise at most that many tuples are tried.
// with_unit_constraint additionally requires H to fix the sum of residue-0
// basis vectors. Unequal gcd chains return inconsistent without any search.
DqSearchOutcome exhaustive_dq_search(const WeightVector& m, const WeightVector& n,
                                     unsigned long long budget, bool with_unit_constraint);

}  // namespace qlens
