#pragma once
// Dense square integer matrices, the cyclic shift and unit-permutation
// matrices, the trace vector Delta, the step-counting function gamma with its
// prime-modulus closed form, rotation/shift canonical forms, and an exact
// determinant.

#include <vector>

#include "qlens/residue.hpp"

namespace qlens {

struct IntMat {
  int n = 0;
  std::vector<i64> a;  // row-major

  IntMat() = default;
  explicit IntMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  i64& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  i64 at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const IntMat&) const = default;

  static IntMat identity(int n);
  bool is_zero() const;
};

IntMat operator*(const IntMat& A, const IntMat& B);
IntMat operator+(const IntMat& A, const IntMat& B);
IntMat operator-(const IntMat& A, const IntMat& B);
std::vector<i64> operator*(const IntMat& A, const std::vector<i64>& v);

// Basis action of the shift: S^e e_i = e_{i-e}.
i64 shift_apply(i64 r, i64 e, i64 v);
// Basis action of a unit permutation: P_alpha e_i = e_{alpha*i}.
i64 perm_apply(i64 r, i64 alpha, i64 v);

IntMat shift_matrix(i64 r, i64 e);
IntMat perm_matrix(i64 r, i64 alpha);

// Delta(Z)_i = trace(S^i Z) = sum_j Z[(j+i) mod r][j].
std::vector<i64> delta(const IntMat& Z);
std::vector<i64> delta_reduced(const IntMat& Z);

// gamma(alpha, beta) = #{ j in 0..r-1 : canonical(alpha*j + beta) <= j }.
i64 gamma_brute(i64 r, i64 alpha, i64 beta);
// Closed form for prime r: r when alpha = 0, beta = 0; r - beta when
// alpha = 0; r when alpha = 1, beta = 0; beta when alpha = 1; (r+1)/2 else.
i64 gamma_closed(i64 r, i64 alpha, i64 beta);

// Least vector (lexicographically) among all cyclic rotations combined with
// all constant shifts mod r. Two vectors are identified by rotation+shift
// exactly when their canonical forms agree.
std::vector<i64> canonicalize_sim(const std::vector<i64>& x, i64 r);

// (0, g, 2g, ..., (r-1)g) mod r.
std::vector<i64> x_gamma(i64 r, i64 g);

// Exact integer determinant (fraction-free elimination).
i64 det_bareiss(IntMat m);

}  // namespace qlens
