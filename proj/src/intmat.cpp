#include "qlens/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qlens {

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; });
}

IntMat operator*(const IntMat& A, const IntMat& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix size mismatch");
  IntMat C(A.n);
  for (int i = 0; i < A.n; ++i) {
    for (int l = 0; l < A.n; ++l) {
      i64 v = A.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < A.n; ++j) C.at(i, j) += v * B.at(l, j);
    }
  }
  return C;
}

IntMat operator+(const IntMat& A, const IntMat& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix size mismatch");
  IntMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

IntMat operator-(const IntMat& A, const IntMat& B) {
  if (A.n != B.n) throw std::invalid_argument("matrix size mismatch");
  IntMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

std::vector<i64> operator*(const IntMat& A, const std::vector<i64>& v) {
  if (v.size() != static_cast<size_t>(A.n)) throw std::invalid_argument("matrix size mismatch");
  std::vector<i64> out(A.n, 0);
  for (int i = 0; i < A.n; ++i) {
    for (int j = 0; j < A.n; ++j) out[i] += A.at(i, j) * v[j];
  }
  return out;
}

i64 shift_apply(i64 r, i64 e, i64 v) {
  if (v < 0 || v >= r) throw std::invalid_argument("basis index out of range");
  return mod_reduce(v - e, r);
}

i64 perm_apply(i64 r, i64 alpha, i64 v) {
  if (v < 0 || v >= r) throw std::invalid_argument("basis index out of range");
  if (!is_unit(alpha, r)) throw std::invalid_argument("not a unit mod r");
  return mod_reduce(alpha * v, r);
}

IntMat shift_matrix(i64 r, i64 e) {
  IntMat m(static_cast<int>(r));
  for (i64 j = 0; j < r; ++j) m.at(static_cast<int>(shift_apply(r, e, j)), static_cast<int>(j)) = 1;
  return m;
}

IntMat perm_matrix(i64 r, i64 alpha) {
  IntMat m(static_cast<int>(r));
  for (i64 j = 0; j < r; ++j) m.at(static_cast<int>(perm_apply(r, alpha, j)), static_cast<int>(j)) = 1;
  return m;
}

std::vector<i64> delta(const IntMat& Z) {
  const i64 r = Z.n;
  std::vector<i64> d(r, 0);
  for (i64 i = 0; i < r; ++i) {
    for (i64 j = 0; j < r; ++j) {
      d[i] += Z.at(static_cast<int>(mod_reduce(j + i, r)), static_cast<int>(j));
    }
  }
  return d;
}

std::vector<i64> delta_reduced(const IntMat& Z) {
  auto d = delta(Z);
  for (auto& v : d) v = mod_reduce(v, Z.n);
  return d;
}

i64 gamma_brute(i64 r, i64 alpha, i64 beta) {
  i64 count = 0;
  for (i64 j = 0; j < r; ++j) {
    if (mod_reduce(alpha * j + beta, r) <= j) ++count;
  }
  return count;
}

i64 gamma_closed(i64 r, i64 alpha, i64 beta) {
  alpha = mod_reduce(alpha, r);
  beta = mod_reduce(beta, r);
  if (alpha == 0) return beta == 0 ? r : r - beta;
  if (alpha == 1) return beta == 0 ? r : beta;
  return (r + 1) / 2;
}

std::vector<i64> canonicalize_sim(const std::vector<i64>& x, i64 r) {
  if (x.size() != static_cast<size_t>(r)) throw std::invalid_argument("vector length must be r");
  std::vector<i64> best;
  std::vector<i64> cand(r);
  for (i64 rot = 0; rot < r; ++rot) {
    i64 base = mod_reduce(x[rot], r);
    for (i64 i = 0; i < r; ++i) cand[i] = mod_reduce(x[(i + rot) % r] - base, r);
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::vector<i64> x_gamma(i64 r, i64 g) {
  std::vector<i64> x(r);
  for (i64 i = 0; i < r; ++i) x[i] = mod_reduce(i * g, r);
  return x;
}

i64 det_bareiss(IntMat m) {
  const int n = m.n;
  if (n == 0) return 1;
  i64 sign = 1, prev = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (m.at(p, p) == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < n; ++i) {
        if (m.at(i, p) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(p, p) - m.at(i, p) * m.at(p, j)) / prev;
      }
      m.at(i, p) = 0;
    }
    prev = m.at(p, p);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace qlens
