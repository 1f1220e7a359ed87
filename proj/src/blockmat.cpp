#include "qlens/blockmat.hpp"

#include <stdexcept>

namespace qlens {

IntMat BlockMat::flatten() const {
  const int n = levels * static_cast<int>(r);
  IntMat m(n);
  for (int a = 0; a < levels; ++a) {
    for (int b = 0; b < levels; ++b) {
      const IntMat& block = at(a, b);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          m.at(a * static_cast<int>(r) + i, b * static_cast<int>(r) + j) = block.at(i, j);
        }
      }
    }
  }
  return m;
}

BlockMat block_mul(const BlockMat& A, const BlockMat& B) {
  if (A.levels != B.levels || A.r != B.r) throw std::invalid_argument("block size mismatch");
  BlockMat C(A.levels, A.r);
  for (int a = 0; a < A.levels; ++a) {
    for (int b = 0; b < A.levels; ++b) {
      IntMat acc(static_cast<int>(A.r));
      for (int c = 0; c < A.levels; ++c) {
        if (A.at(a, c).is_zero() || B.at(c, b).is_zero()) continue;
        acc = acc + A.at(a, c) * B.at(c, b);
      }
      C.at(a, b) = std::move(acc);
    }
  }
  return C;
}

std::vector<i64> block_apply(const BlockMat& A, const std::vector<i64>& v) {
  return A.flatten() * v;
}

BlockMat build_B(const WeightVector& w) {
  BlockMat B(w.levels(), w.r);
  for (int a = 0; a < w.levels(); ++a) {
    IntMat S = shift_matrix(w.r, w.weights[a]);
    for (int b = 0; b <= a; ++b) {
      if (a == b) {
        B.at(a, b) = S;
      } else {
        IntMat neg(S.n);
        for (size_t t = 0; t < S.a.size(); ++t) neg.a[t] = -S.a[t];
        B.at(a, b) = neg;
      }
    }
  }
  return B;
}

IntMat y21_from_column(i64 r, i64 m1, i64 m2, i64 n1, i64 n2, const std::vector<i64>& y) {
  if (!is_prime(r)) throw std::invalid_argument("prime modulus required");
  if (y.size() != static_cast<size_t>(r)) throw std::invalid_argument("column length must be r");
  for (i64 v : {m1, m2, n1, n2}) {
    if (!is_unit(v, r)) throw std::invalid_argument("not a unit mod r");
  }
  IntMat Y(static_cast<int>(r));
  const i64 inv_n2 = mod_inverse(n2, r), inv_m1 = mod_inverse(m1, r);
  const bool same_m = mod_reduce(m1, r) == mod_reduce(m2, r);
  i64 inv_pN = 0, inv_pM = 0;
  if (!same_m) {
    i64 pN = mod_reduce(mod_div(n1, n2, r) - 1, r);
    i64 pM = mod_reduce(mod_div(m1, m2, r) - 1, r);
    if (pN == 0 || pM == 0)
      throw std::invalid_argument("weights give a zero denominator");
    inv_pN = mod_inverse(pN, r);
    inv_pM = mod_inverse(pM, r);
  }
  for (i64 i = 0; i < r; ++i) {
    for (i64 j = 0; j < r; ++j) {
      i64 u = mod_reduce(i * inv_n2 - j * inv_m1, r);
      i64 val = y[u];
      if (!same_m) {
        i64 threshold = mod_reduce(j * inv_m1, r);
        val += (mod_reduce(u * inv_pN, r) <= threshold ? 1 : 0);
        val -= (mod_reduce(u * inv_pM, r) <= threshold ? 1 : 0);
      }
      Y.at(static_cast<int>(i), static_cast<int>(j)) = val;
    }
  }
  return Y;
}

DeltaClassification delta_y21_classify(i64 r, i64 m1, i64 m2, i64 n1, i64 n2) {
  if (!is_prime(r)) throw std::invalid_argument("prime modulus required");
  for (i64 v : {m1, m2, n1, n2}) {
    if (!is_unit(v, r)) throw std::invalid_argument("not a unit mod r");
  }
  m1 = mod_reduce(m1, r);
  m2 = mod_reduce(m2, r);
  n1 = mod_reduce(n1, r);
  n2 = mod_reduce(n2, r);
  if (m1 == m2 || n1 == n2)
    throw std::invalid_argument("classification needs distinct weights within each vector");

  DeltaClassification c;
  c.p_N = mod_reduce(mod_div(n1, n2, r) - 1, r);
  c.p_M = mod_reduce(mod_div(m1, m2, r) - 1, r);
  i64 sN = mod_inverse(mod_reduce(n2 * c.p_N, r), r);       // 1/(n2 pN)
  i64 sM = mod_inverse(mod_reduce(n2 * c.p_M, r), r);       // 1/(n2 pM)
  bool e11 = m1 == n1, e12 = m1 == n2, e21 = m2 == n1, e22 = m2 == n2;
  int distinct = 4 - (e11 || e12) - (e21 || e22);
  if (distinct == 4) {
    c.label = "4";
    c.gamma = 0;
  } else if (distinct == 3) {
    if (e11) {
      c.label = "3a";
      c.gamma = sN;
    } else if (e12) {
      c.label = "3b";
      c.gamma = mod_reduce(sM - sN, r);
    } else if (e21) {
      c.label = "3c";
      c.gamma = 0;
    } else {
      c.label = "3d";
      c.gamma = mod_reduce(-sM, r);
    }
  } else {
    if (e11 && e22) {
      c.label = "2a";
      c.gamma = 0;
    } else {
      c.label = "2b";
      c.gamma = mod_reduce(sM - sN, r);
    }
  }
  return c;
}

bool check_dq1_witness(const BlockMat& H) {
  std::vector<i64> u(static_cast<size_t>(H.levels) * H.r, 0);
  for (int a = 0; a < H.levels; ++a) u[static_cast<size_t>(a) * H.r] = 1;
  return block_apply(H, u) == u;
}

}  // namespace qlens
