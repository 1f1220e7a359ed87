#pragma once
// Block integer matrices over level pairs: the lower-triangular system matrix
// B attached to a weight vector, candidate intertwiners, the explicit closed
// form for the off-diagonal block of the two-level system, the classification
// of its reduced trace vector, and the distinguished-vector fixing check.

#include <string>

#include "qlens/intmat.hpp"
#include "qlens/residue.hpp"

namespace qlens {

// (levels x levels) grid of r x r integer blocks; block (a, b) acts from
// level-b coordinates into level-a coordinates. Flat index (i-1)*r + j.
struct BlockMat {
  int levels = 0;
  i64 r = 0;
  std::vector<IntMat> blk;

  BlockMat() = default;
  BlockMat(int levels_, i64 r_)
      : levels(levels_), r(r_),
        blk(static_cast<size_t>(levels_) * levels_, IntMat(static_cast<int>(r_))) {}

  IntMat& at(int a, int b) { return blk[static_cast<size_t>(a) * levels + b]; }
  const IntMat& at(int a, int b) const { return blk[static_cast<size_t>(a) * levels + b]; }

  IntMat flatten() const;
  bool operator==(const BlockMat&) const = default;
};

BlockMat block_mul(const BlockMat& A, const BlockMat& B);
std::vector<i64> block_apply(const BlockMat& A, const std::vector<i64>& v);

// Diagonal blocks S^{m_i}; every block below the diagonal in block-row i is
// -S^{m_i}. Unimodular.
BlockMat build_B(const WeightVector& w);

// The off-diagonal block of the two-level intertwining system with diagonal
// blocks (P_{n1/m1}, P_{n2/m2}) and zero shift exponents, determined by its
// first column y (length r):
//   u = i/n2 - j/m1 (mod r)
//   m1 != m2:  Y(i,j) = [[u/pN <= j/m1]] - [[u/pM <= j/m1]] + y_u,
//              pN = n1/n2 - 1, pM = m1/m2 - 1 (comparisons on canonical
//              representatives)
//   m1 == m2:  Y(i,j) = y_u
IntMat y21_from_column(i64 r, i64 m1, i64 m2, i64 n1, i64 n2, const std::vector<i64>& y);

// Case label by the identity pattern among {m1, m2, n1, n2} plus the slope g
// such that the reduced trace vector of the y = 0 block is equivalent to
// (0, g, 2g, ...) under rotation+shift:
//   4 distinct -> 0;  m1=n1 -> 1/(n2 pN);  m1=n2 -> 1/(n2 pM) - 1/(n2 pN);
//   m2=n1 -> 0;  m2=n2 -> -1/(n2 pM);  m=n -> 0;  swapped -> 1/(n2 pM) - 1/(n2 pN).
struct DeltaClassification {
  std::string label;  // "4", "3a", "3b", "3c", "3d", "2a", "2b"
  i64 gamma = 0;
  i64 p_M = 0, p_N = 0;
};

// Requires prime r, all four weights units, m1 != m2, n1 != n2.
DeltaClassification delta_y21_classify(i64 r, i64 m1, i64 m2, i64 n1, i64 n2);

// H fixes the sum of the residue-0 basis vectors over all levels.
bool check_dq1_witness(const BlockMat& H);

}  // namespace qlens
