#include <doctest.h>
#include <stdexcept>

#include <set>
#include <vector>

#include "qlens/intmat.hpp"
#include "qlens/residue.hpp"

using namespace qlens;

namespace {

std::vector<i64> rotate_shift(const std::vector<i64>& x, i64 r, int t, i64 c) {
  std::vector<i64> out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = mod_reduce(x[(i + t) % x.size()] + c, r);
  return out;
}

}  // namespace

TEST_CASE("shift and permutation matrices realize their basis actions") {
  for (i64 r : {3, 5, 8}) {
    for (i64 e = 0; e < r; ++e) {
      IntMat S = shift_matrix(r, e);
      for (i64 b = 0; b < r; ++b) {
        i64 img = shift_apply(r, e, b);
        for (i64 i = 0; i < r; ++i)
          CHECK(S.at(static_cast<int>(i), static_cast<int>(b)) ==
                (i == img ? 1 : 0));
      }
    }
    for (i64 alpha = 1; alpha < r; ++alpha) {
      if (!is_unit(alpha, r)) continue;
      IntMat P = perm_matrix(r, alpha);
      for (i64 b = 0; b < r; ++b) {
        i64 img = perm_apply(r, alpha, b);
        for (i64 i = 0; i < r; ++i)
          CHECK(P.at(static_cast<int>(i), static_cast<int>(b)) ==
                (i == img ? 1 : 0));
      }
    }
  }
  CHECK(shift_apply(5, 1, 0) == 4);  // e_0 -> e_{-1}
  CHECK(perm_apply(5, 2, 3) == 1);   // e_3 -> e_6
  CHECK_THROWS_WITH_AS(shift_apply(5, 1, 5), "basis index out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(perm_apply(5, 2, -1), "basis index out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(perm_apply(6, 2, 1), "not a unit mod r",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(perm_matrix(6, 3), "not a unit mod r",
                       std::invalid_argument);
}

TEST_CASE("shift exponents reduce mod r and compose") {
  CHECK(shift_matrix(5, 7) == shift_matrix(5, 2));
  CHECK(shift_matrix(5, -1) == shift_matrix(5, 4));
  for (i64 r : {4, 7}) {
    IntMat S = shift_matrix(r, 1);
    IntMat acc = IntMat::identity(static_cast<int>(r));
    for (i64 e = 0; e < r; ++e) {
      CHECK(acc == shift_matrix(r, e));
      acc = S * acc;
    }
    CHECK(acc == IntMat::identity(static_cast<int>(r)));  // S^r = I
  }
}

TEST_CASE("coordinate action of the shift reads one step ahead") {
  // Column vectors: (S^e x)_i = x_{(i+e) mod r}.
  i64 r = 6;
  std::vector<i64> x = {10, 20, 30, 40, 50, 60};
  for (i64 e = 0; e < r; ++e) {
    auto y = shift_matrix(r, e) * x;
    for (i64 i = 0; i < r; ++i)
      CHECK(y[static_cast<size_t>(i)] == x[static_cast<size_t>((i + e) % r)]);
  }
}

TEST_CASE("permutation and shift interchange through the exponent") {
  for (i64 r : {5, 7, 8}) {
    for (i64 alpha = 1; alpha < r; ++alpha) {
      if (!is_unit(alpha, r)) continue;
      IntMat P = perm_matrix(r, alpha);
      for (i64 e = 0; e < r; ++e)
        CHECK(P * shift_matrix(r, e) == shift_matrix(r, alpha * e) * P);
    }
  }
}

TEST_CASE("the trace vector matches its definition") {
  i64 r = 4;
  IntMat Z(static_cast<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) Z.at(i, j) = 3 * i + 5 * j + 1;
  auto d = delta(Z);
  REQUIRE(d.size() == static_cast<size_t>(r));
  for (i64 i = 0; i < r; ++i) {
    i64 direct = 0;  // trace(S^i Z) summed along the wrapped diagonal
    for (i64 j = 0; j < r; ++j)
      direct += Z.at(static_cast<int>((j + i) % r), static_cast<int>(j));
    CHECK(d[static_cast<size_t>(i)] == direct);
  }
}

TEST_CASE("trace vectors of shift powers and the identity") {
  CHECK(delta(shift_matrix(5, 1)) == std::vector<i64>{0, 0, 0, 0, 5});
  CHECK(delta(IntMat::identity(5)) == std::vector<i64>{5, 0, 0, 0, 0});
  CHECK(delta(shift_matrix(5, 2)) == std::vector<i64>{0, 0, 0, 5, 0});
  CHECK(delta_reduced(shift_matrix(5, 1)) == std::vector<i64>{0, 0, 0, 0, 0});
  IntMat Z(3);
  Z.at(0, 0) = 7;
  Z.at(1, 0) = -1;
  CHECK(delta(Z) == std::vector<i64>{7, -1, 0});
  CHECK(delta_reduced(Z) == std::vector<i64>{1, 2, 0});
}

TEST_CASE("gamma closed form agrees with counting at prime moduli") {
  for (i64 r : {3, 5, 7, 11, 13}) {
    for (i64 alpha = 0; alpha < r; ++alpha)
      for (i64 beta = 0; beta < r; ++beta)
        CHECK(gamma_closed(r, alpha, beta) == gamma_brute(r, alpha, beta));
  }
  CHECK(gamma_closed(5, 0, 0) == 5);
  CHECK(gamma_closed(5, 0, 2) == 3);
  CHECK(gamma_closed(5, 1, 0) == 5);
  CHECK(gamma_closed(5, 1, 2) == 2);
  CHECK(gamma_closed(5, 2, 3) == 3);
}

TEST_CASE("rotation+shift canonical form is idempotent and invariant") {
  i64 r = 5;
  std::vector<i64> v = {3, 1, 4, 1, 0};
  auto canon = canonicalize_sim(v, r);
  CHECK(canonicalize_sim(canon, r) == canon);
  CHECK(canon[0] == 0);  // every candidate starts at 0
  for (int t = 0; t < 5; ++t)
    for (i64 c = 0; c < r; ++c)
      CHECK(canonicalize_sim(rotate_shift(v, r, t, c), r) == canon);
  CHECK_THROWS_WITH_AS(canonicalize_sim({0, 1}, 5), "vector length must be r",
                       std::invalid_argument);
}

TEST_CASE("slope vectors are fixed points with pairwise distinct classes") {
  i64 r = 7;
  CHECK(x_gamma(5, 2) == std::vector<i64>{0, 2, 4, 1, 3});
  std::set<std::vector<i64>> classes;
  for (i64 g = 0; g < r; ++g) {
    auto xg = x_gamma(r, g);
    CHECK(canonicalize_sim(xg, r) == xg);
    classes.insert(xg);
  }
  CHECK(classes.size() == 7);
}

TEST_CASE("exact determinants of permutations and frozen matrices") {
  CHECK(det_bareiss(IntMat::identity(4)) == 1);
  CHECK(det_bareiss(shift_matrix(3, 1)) == 1);
  CHECK(det_bareiss(shift_matrix(4, 1)) == -1);
  for (i64 r : {5, 6}) {
    for (i64 e = 0; e < r; ++e) {
      i64 d = det_bareiss(shift_matrix(r, e));
      CHECK((d == 1 || d == -1));
    }
    for (i64 alpha = 1; alpha < r; ++alpha) {
      if (!is_unit(alpha, r)) continue;
      i64 d = det_bareiss(perm_matrix(r, alpha));
      CHECK((d == 1 || d == -1));
    }
  }
  IntMat M(3);
  i64 vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = vals[i][j];
  CHECK(det_bareiss(M) == -3);
  IntMat Sg(2);
  Sg.at(0, 0) = 1;
  Sg.at(0, 1) = 2;
  Sg.at(1, 0) = 2;
  Sg.at(1, 1) = 4;
  CHECK(det_bareiss(Sg) == 0);
}

TEST_CASE("arithmetic rejects mismatched sizes") {
  IntMat A(2), B(3);
  CHECK_THROWS_WITH_AS(A * B, "matrix size mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(A + B, "matrix size mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(A - B, "matrix size mismatch", std::invalid_argument);
  std::vector<i64> v = {1, 2, 3};
  CHECK_THROWS_WITH_AS(A * v, "matrix size mismatch", std::invalid_argument);
}

TEST_CASE("matrix algebra identities hold") {
  i64 r = 5;
  IntMat S = shift_matrix(r, 1), P = perm_matrix(r, 2);
  CHECK((S + P) - P == S);
  CHECK(S * IntMat::identity(5) == S);
  CHECK(IntMat(5).is_zero());
  CHECK(!S.is_zero());
  CHECK((S - S).is_zero());
}
