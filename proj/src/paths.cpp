#include "qlens/paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qlens {

namespace {

void enum_chain(const WeightVector& w, const std::vector<int>& chain,
                std::vector<AdmissiblePath>& out) {
  const i64 r = w.r;
  const int last = static_cast<int>(chain.size()) - 1;
  std::vector<i64> loops(chain.size(), 0);

  auto rec = [&](auto&& self, int pos, i64 residue) -> void {
    const i64 wgt = w.weights[chain[pos] - 1];
    if (pos == last) {
      i64 tend = mod_reduce(-residue * mod_inverse(wgt, r), r);
      loops[pos] = tend;
      i64 len = 0;
      for (i64 c : loops) len += c;
      out.push_back({chain, loops, len + last});
      return;
    }
    i64 limit;  // dwell counts allowed before residue 0 would be visited
    if (pos == 0) {
      limit = r;
    } else {
      if (residue == 0) return;  // entering residue 0 strictly inside
      limit = mod_reduce(-residue * mod_inverse(wgt, r), r);
    }
    for (i64 c = 0; c < limit; ++c) {
      loops[pos] = c;
      self(self, pos + 1, mod_reduce(residue + wgt * (c + 1), r));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<AdmissiblePath> enumerate_admissible(const WeightVector& w, int s, int t) {
  if (s < 1 || t > w.levels() || s >= t)
    throw std::invalid_argument("need levels 1 <= s < t <= k+1");
  std::vector<int> mids;
  for (int i = s + 1; i < t; ++i) mids.push_back(i);
  std::vector<AdmissiblePath> out;
  const int n = static_cast<int>(mids.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> chain{s};
    for (int b = 0; b < n; ++b) {
      if (mask & (1 << b)) chain.push_back(mids[b]);
    }
    chain.push_back(t);
    enum_chain(w, chain, out);
  }
  return out;
}

std::vector<i64> count_residues(const std::vector<AdmissiblePath>& paths, i64 r) {
  std::vector<i64> counts(r, 0);
  for (const auto& p : paths) counts[mod_reduce(p.length, r)]++;
  return counts;
}

std::vector<i64> pair_multiset_closed_form(i64 r, i64 m1, i64 m2) {
  if (!is_unit(m1, r) || !is_unit(m2, r)) throw std::invalid_argument("not a unit mod r");
  i64 diff = mod_reduce(m2 - m1, r);
  i64 g = diff == 0 ? r : gcd_nonneg(diff, r);
  std::vector<i64> counts(r, 0);
  for (i64 c = 0; c < r; c += g) counts[c] = g;
  return counts;
}

const std::vector<i64>* PathMultiset::find(int s, int t) const {
  for (const auto& [pair, c] : counts) {
    if (pair.first == s && pair.second == t) return &c;
  }
  return nullptr;
}

PathMultiset multiset_wbar(const WeightVector& w) {
  PathMultiset ms;
  ms.r = w.r;
  for (int s = 1; s <= w.levels(); ++s) {
    for (int t = s + 1; t <= w.levels(); ++t) {
      ms.counts.push_back({{s, t}, transfer_count(w, s, t)});
    }
  }
  if (w.k() == 1) {
    for (const auto& p : enumerate_admissible(w, 1, 2)) ms.raw_lengths.push_back(p.length);
    std::sort(ms.raw_lengths.begin(), ms.raw_lengths.end());
  }
  return ms;
}

bool wbar_equal(const WeightVector& m, const WeightVector& n) {
  if (m.r != n.r || m.levels() != n.levels())
    throw std::invalid_argument("weight vectors must share modulus and length");
  return multiset_wbar(m) == multiset_wbar(n);
}

TriplePathDecomposition triple_decompose(const WeightVector& w, i64 t1, i64 t3) {
  if (w.levels() != 3) throw std::invalid_argument("weight vector must have 3 levels");
  const i64 r = w.r;
  if (t1 < 0 || t1 >= r || t3 < 0 || t3 >= r)
    throw std::invalid_argument("dwell counts must lie in 0..r-1");
  i64 m1 = w.weights[0], m2 = w.weights[1], m3 = w.weights[2];
  TriplePathDecomposition d;
  d.t2p = mod_reduce(-m1 * (t1 + 1) * mod_inverse(m2, r), r);
  d.t2pp = mod_reduce(-(m3 * t3 + m2) * mod_inverse(m2, r), r);
  d.t2 = mod_reduce(d.t2p + d.t2pp, r);
  d.admissible = d.t2p + d.t2pp >= r;
  return d;
}

std::vector<i64> transfer_count(const WeightVector& w, int s, int t) {
  if (s < 1 || t > w.levels() || s >= t)
    throw std::invalid_argument("need levels 1 <= s < t <= k+1");
  const i64 r = w.r;
  using Poly = std::vector<i64>;  // coefficients of x^0..x^{r-1}, mod x^r - 1
  auto shift = [&](const Poly& p, i64 e) {
    Poly q(r, 0);
    for (i64 i = 0; i < r; ++i) q[i] = p[mod_reduce(i - e, r)];
    return q;
  };
  auto add_into = [&](Poly& a, const Poly& b) {
    for (i64 i = 0; i < r; ++i) a[i] += b[i];
  };
  auto nonzero = [&](const Poly& p) {
    return std::any_of(p.begin(), p.end(), [](i64 c) { return c != 0; });
  };

  // state[level][rho] = generating polynomial of partial paths that are done
  // dwelling at that level, currently at residue rho
  std::map<int, std::vector<Poly>> state;
  std::vector<Poly> start(r, Poly(r, 0));
  for (i64 c = 0; c < r; ++c) start[mod_reduce(w.weights[s - 1] * c, r)][c % r] += 1;
  state[s] = std::move(start);

  for (int j = s + 1; j < t; ++j) {
    std::vector<Poly> arrive(r, Poly(r, 0));
    for (const auto& [p, vec] : state) {
      i64 wp = w.weights[p - 1];
      for (i64 rho = 0; rho < r; ++rho) {
        if (!nonzero(vec[rho])) continue;
        add_into(arrive[mod_reduce(rho + wp, r)], shift(vec[rho], 1));
      }
    }
    i64 wj = w.weights[j - 1];
    std::vector<Poly> done(r, Poly(r, 0));
    for (i64 rho = 1; rho < r; ++rho) {  // entering residue 0 is fatal here
      if (!nonzero(arrive[rho])) continue;
      i64 limit = mod_reduce(-rho * mod_inverse(wj, r), r);
      for (i64 c = 0; c < limit; ++c) {
        add_into(done[mod_reduce(rho + wj * c, r)], shift(arrive[rho], c));
      }
    }
    state[j] = std::move(done);
  }

  Poly total(r, 0);
  i64 wt = w.weights[t - 1];
  for (const auto& [p, vec] : state) {
    i64 wp = w.weights[p - 1];
    for (i64 rho = 0; rho < r; ++rho) {
      if (!nonzero(vec[rho])) continue;
      i64 rho2 = mod_reduce(rho + wp, r);
      i64 tend = mod_reduce(-rho2 * mod_inverse(wt, r), r);
      add_into(total, shift(vec[rho], 1 + tend));
    }
  }
  return total;
}

std::vector<i64> xi_sequence(i64 r, i64 m1, i64 m2) {
  std::vector<i64> xs;
  i64 inv2 = mod_inverse(m2, r);
  if (!is_unit(m1, r)) throw std::invalid_argument("not a unit mod r");
  for (i64 t1 = 0; t1 < r; ++t1) {
    i64 t2 = mod_reduce(-m1 * (t1 + 1) * inv2, r);
    xs.push_back(t1 + t2 + 1);
  }
  return xs;
}

std::vector<CertEntry> d3_certificate(const WeightVector& m, const WeightVector& n) {
  if (m.k() != 1 || n.k() != 1 || m.r != n.r)
    throw std::invalid_argument("pairing needs two-level weight vectors over one modulus");
  if (!wbar_equal(m, n)) throw std::invalid_argument("no equivariant pairing exists");
  const i64 r = m.r;
  auto grouped = [&](const WeightVector& w) {
    std::map<i64, std::vector<AdmissiblePath>> groups;
    auto paths = enumerate_admissible(w, 1, 2);
    std::sort(paths.begin(), paths.end(),
              [](const AdmissiblePath& a, const AdmissiblePath& b) { return a.loops < b.loops; });
    for (const auto& p : paths) groups[mod_reduce(p.length, r)].push_back(p);
    return groups;
  };
  auto gm = grouped(m), gn = grouped(n);
  std::vector<CertEntry> cert;
  for (auto& [res, from_paths] : gm) {
    auto& to_paths = gn[res];
    for (size_t i = 0; i < from_paths.size(); ++i) {
      i64 ell = (from_paths[i].length - to_paths[i].length) / r;
      cert.push_back({from_paths[i], to_paths[i], ell});
    }
  }
  return cert;
}

}  // namespace qlens
