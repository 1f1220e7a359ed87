#pragma once
// Exact modular arithmetic over Z/r: units, inverses, divisor counting, the
// set of gcd values realizable as unit differences, and the weight-vector
// parameter object used everywhere else.

#include <cstdint>
#include <utility>
#include <vector>

namespace qlens {

using i64 = std::int64_t;

// Canonical representative in 0..r-1.
i64 mod_reduce(i64 a, i64 r);

// gcd(|a|, |b|), with gcd(0, b) = |b|.
i64 gcd_nonneg(i64 a, i64 b);

bool is_unit(i64 a, i64 r);

// Multiplicative inverse of a unit mod r.
// Throws std::invalid_argument("not a unit mod r") otherwise.
i64 mod_inverse(i64 a, i64 r);

// a * b^{-1} mod r.
i64 mod_div(i64 a, i64 b, i64 r);

// Number of positive divisors; throws std::invalid_argument for n < 1.
i64 tau(i64 n);

bool is_prime(i64 n);

// Divisors of r realizable as gcd(x - y, r) with x, y units: every divisor
// when r is odd, the even divisors when r is even. Sorted ascending.
// Cardinality is tau(r) for odd r and tau(r/2) for even r.
std::vector<i64> admissible_gcd_set(i64 r);

// Deterministic unit pair (x, y) with gcd(x - y, r) = d: y is the least
// residue >= 1 with y and y + d both units, x = (y + d) mod r.
// Throws std::invalid_argument("gcd value not realizable by units").
std::pair<i64, i64> witness_unit_pair(i64 r, i64 d);

// Parameters (r; m_1, ..., m_{k+1}), every weight a unit mod r. Inputs are
// reduced to canonical residues before the unit check.
struct WeightVector {
  i64 r = 0;
  std::vector<i64> weights;

  WeightVector(i64 r, std::vector<i64> w);
  int k() const { return static_cast<int>(weights.size()) - 1; }
  int levels() const { return static_cast<int>(weights.size()); }
  bool operator==(const WeightVector&) const = default;
};

// d_i = gcd(m_{i+1} - m_i, r) for i = 1..k. Two weight vectors have
// isomorphic lattices of invariant ideals exactly when the chains agree.
std::vector<i64> ideal_invariant(const WeightVector& w);

WeightVector scale_weights(const WeightVector& w, i64 alpha);

// Representative of the unit-scaling orbit with first weight 1 (the
// lexicographically least member of the orbit).
WeightVector normalize_weights(const WeightVector& w);

// True when n = alpha * m for some unit alpha.
bool is_unit_multiple(const WeightVector& m, const WeightVector& n);

}  // namespace qlens
