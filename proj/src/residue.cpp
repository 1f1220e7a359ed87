#include "qlens/residue.hpp"

#include <numeric>
#include <stdexcept>

namespace qlens {

i64 mod_reduce(i64 a, i64 r) {
  i64 v = a % r;
  return v < 0 ? v + r : v;
}

i64 gcd_nonneg(i64 a, i64 b) { return std::gcd(a, b); }

bool is_unit(i64 a, i64 r) { return std::gcd(mod_reduce(a, r), r) == 1; }

i64 mod_inverse(i64 a, i64 r) {
  a = mod_reduce(a, r);
  if (std::gcd(a, r) != 1) throw std::invalid_argument("not a unit mod r");
  i64 old_r = a, cur_r = r;
  i64 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    i64 q = old_r / cur_r;
    i64 t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  return mod_reduce(old_s, r);
}

i64 mod_div(i64 a, i64 b, i64 r) {
  return mod_reduce(mod_reduce(a, r) * mod_inverse(b, r), r);
}

i64 tau(i64 n) {
  if (n < 1) throw std::invalid_argument("divisor count needs a positive integer");
  i64 count = 0;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<i64> admissible_gcd_set(i64 r) {
  if (r < 2) throw std::invalid_argument("modulus must be at least 2");
  std::vector<i64> out;
  for (i64 d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    if (r % 2 == 0 && d % 2 != 0) continue;
    out.push_back(d);
  }
  return out;
}

std::pair<i64, i64> witness_unit_pair(i64 r, i64 d) {
  bool admissible = d >= 1 && r >= 2 && r % d == 0 && (r % 2 != 0 || d % 2 == 0);
  if (!admissible) throw std::invalid_argument("gcd value not realizable by units");
  for (i64 y = 1; y < r + 1; ++y) {
    if (is_unit(y, r) && is_unit(y + d, r)) {
      return {mod_reduce(y + d, r), mod_reduce(y, r)};
    }
  }
  throw std::invalid_argument("gcd value not realizable by units");
}

WeightVector::WeightVector(i64 r_, std::vector<i64> w) : r(r_), weights(std::move(w)) {
  if (r < 2) throw std::invalid_argument("modulus must be at least 2");
  if (weights.size() < 2) throw std::invalid_argument("weight vector needs at least 2 weights");
  for (auto& m : weights) {
    m = mod_reduce(m, r);
    if (std::gcd(m, r) != 1) throw std::invalid_argument("not a unit mod r");
  }
}

std::vector<i64> ideal_invariant(const WeightVector& w) {
  std::vector<i64> chain;
  chain.reserve(w.k());
  for (int i = 0; i + 1 < w.levels(); ++i) {
    i64 diff = mod_reduce(w.weights[i + 1] - w.weights[i], w.r);
    chain.push_back(diff == 0 ? w.r : std::gcd(diff, w.r));
  }
  return chain;
}

WeightVector scale_weights(const WeightVector& w, i64 alpha) {
  if (!is_unit(alpha, w.r)) throw std::invalid_argument("not a unit mod r");
  std::vector<i64> scaled = w.weights;
  for (auto& m : scaled) m = mod_reduce(m * mod_reduce(alpha, w.r), w.r);
  return WeightVector(w.r, std::move(scaled));
}

WeightVector normalize_weights(const WeightVector& w) {
  return scale_weights(w, mod_inverse(w.weights[0], w.r));
}

bool is_unit_multiple(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != n.levels()) return false;
  i64 alpha = mod_div(n.weights[0], m.weights[0], m.r);
  for (int i = 0; i < m.levels(); ++i) {
    if (mod_reduce(alpha * m.weights[i], m.r) != n.weights[i]) return false;
  }
  return true;
}

}  // namespace qlens
