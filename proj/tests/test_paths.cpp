#include <doctest.h>
#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "qlens/paths.hpp"
#include "qlens/residue.hpp"

using namespace qlens;

namespace {

using PathKey = std::pair<std::vector<int>, std::vector<i64>>;

PathKey key_of(const AdmissiblePath& p) { return {p.chain, p.loops}; }

std::set<PathKey> key_set(const std::vector<AdmissiblePath>& ps) {
  std::set<PathKey> out;
  for (const auto& p : ps) out.insert(key_of(p));
  CHECK(out.size() == ps.size());  // no duplicate paths
  return out;
}

// Independent oracle: walk the lift move by move. Starting residue 0; every
// move adds the weight of the level it leaves from (dwell loops plus one jump
// per chain step, no jump after the last level); the final residue must be 0
// and every strictly earlier one nonzero.
std::set<PathKey> brute_paths(const WeightVector& w, int s, int t) {
  std::set<PathKey> out;
  std::vector<int> interior;
  for (int l = s + 1; l < t; ++l) interior.push_back(l);
  const int ni = static_cast<int>(interior.size());
  for (int mask = 0; mask < (1 << ni); ++mask) {
    std::vector<int> chain = {s};
    for (int b = 0; b < ni; ++b)
      if (mask & (1 << b)) chain.push_back(interior[b]);
    chain.push_back(t);
    const size_t j = chain.size();
    std::vector<i64> loops(j, 0);
    while (true) {
      std::vector<i64> positions;
      i64 rho = 0;
      for (size_t p = 0; p < j; ++p) {
        i64 mw = w.weights[static_cast<size_t>(chain[p] - 1)];
        i64 moves = loops[p] + (p + 1 < j ? 1 : 0);
        for (i64 q = 0; q < moves; ++q) {
          rho = mod_reduce(rho + mw, w.r);
          positions.push_back(rho);
        }
      }
      bool ok = !positions.empty() && positions.back() == 0;
      for (size_t q = 0; ok && q + 1 < positions.size(); ++q)
        if (positions[q] == 0) ok = false;
      if (ok) out.insert({chain, loops});

      size_t idx = j;
      while (idx > 0 && loops[idx - 1] == w.r - 1) loops[--idx] = 0;
      if (idx == 0) break;
      ++loops[idx - 1];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("two-level path lengths indexed by the first dwell count") {
  CHECK(xi_sequence(7, 1, 2) == std::vector<i64>{4, 8, 5, 9, 6, 10, 7});
  CHECK(xi_sequence(7, 1, 3) == std::vector<i64>{3, 6, 9, 5, 8, 11, 7});
  CHECK(xi_sequence(7, 1, 4) == std::vector<i64>{6, 5, 4, 10, 9, 8, 7});
  CHECK(xi_sequence(7, 1, 5) == std::vector<i64>{5, 3, 8, 6, 11, 9, 7});
  CHECK(xi_sequence(7, 1, 6) == std::vector<i64>{2, 4, 6, 8, 10, 12, 7});
  CHECK_THROWS_WITH_AS(xi_sequence(6, 2, 1), "not a unit mod r",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(xi_sequence(6, 1, 2), "not a unit mod r",
                       std::invalid_argument);
}

TEST_CASE("xi values are the enumerated two-level lengths") {
  for (i64 r : {5, 7, 9}) {
    for (i64 m1 = 1; m1 < r; ++m1) {
      for (i64 m2 = 1; m2 < r; ++m2) {
        if (!is_unit(m1, r) || !is_unit(m2, r)) continue;
        auto xs = xi_sequence(r, m1, m2);
        auto paths = enumerate_admissible(WeightVector(r, {m1, m2}), 1, 2);
        REQUIRE(paths.size() == static_cast<size_t>(r));
        for (const auto& p : paths) {
          REQUIRE(p.loops.size() == 2);
          CHECK(p.length == xs[static_cast<size_t>(p.loops[0])]);
        }
      }
    }
  }
}

TEST_CASE("two-level reduced multisets match the gcd closed form") {
  for (i64 r = 2; r <= 20; ++r) {
    for (i64 m1 = 1; m1 < r; ++m1) {
      for (i64 m2 = 1; m2 < r; ++m2) {
        if (!is_unit(m1, r) || !is_unit(m2, r)) continue;
        auto paths = enumerate_admissible(WeightVector(r, {m1, m2}), 1, 2);
        CHECK(count_residues(paths, r) == pair_multiset_closed_form(r, m1, m2));
      }
    }
  }
  CHECK(pair_multiset_closed_form(5, 1, 3) == std::vector<i64>{1, 1, 1, 1, 1});
  CHECK(pair_multiset_closed_form(8, 1, 5) ==
        std::vector<i64>{4, 0, 0, 0, 4, 0, 0, 0});
  CHECK(pair_multiset_closed_form(5, 2, 2) == std::vector<i64>{5, 0, 0, 0, 0});
}

TEST_CASE("enumerated paths satisfy the admissibility constraints") {
  WeightVector w(7, {1, 5, 3});
  auto paths = enumerate_admissible(w, 1, 3);
  for (const auto& p : paths) {
    REQUIRE(p.chain.size() >= 2);
    CHECK(p.chain.front() == 1);
    CHECK(p.chain.back() == 3);
    CHECK(std::is_sorted(p.chain.begin(), p.chain.end()));
    i64 total = 0;
    for (size_t q = 0; q < p.chain.size(); ++q) {
      CHECK(p.loops[q] >= 0);
      CHECK(p.loops[q] < 7);
      i64 mw = w.weights[static_cast<size_t>(p.chain[q] - 1)];
      total += mw * (p.loops[q] + (q + 1 < p.chain.size() ? 1 : 0));
    }
    CHECK(mod_reduce(total, 7) == 0);
    i64 len = std::accumulate(p.loops.begin(), p.loops.end(), i64{0}) +
              static_cast<i64>(p.chain.size()) - 1;
    CHECK(p.length == len);
  }
}

TEST_CASE("enumeration agrees with the move-by-move lift simulation") {
  std::vector<WeightVector> samples = {WeightVector(5, {1, 2, 3, 1}),
                                       WeightVector(7, {1, 5, 3}),
                                       WeightVector(8, {1, 3, 5, 7})};
  for (const auto& w : samples) {
    for (int s = 1; s <= w.levels(); ++s) {
      for (int t = s + 1; t <= w.levels(); ++t) {
        CHECK(key_set(enumerate_admissible(w, s, t)) == brute_paths(w, s, t));
      }
    }
  }
}

TEST_CASE("transfer-matrix counting agrees with enumeration") {
  std::vector<WeightVector> samples = {
      WeightVector(5, {1, 2, 3, 1}), WeightVector(7, {1, 5, 3}),
      WeightVector(8, {1, 3, 5, 7}), WeightVector(12, {1, 5, 7, 11}),
      WeightVector(11, {1, 2, 3})};
  for (const auto& w : samples) {
    for (int s = 1; s <= w.levels(); ++s) {
      for (int t = s + 1; t <= w.levels(); ++t) {
        CHECK(transfer_count(w, s, t) ==
              count_residues(enumerate_admissible(w, s, t), w.r));
      }
    }
  }
}

TEST_CASE("full multiset collects every level pair in lexicographic order") {
  WeightVector w(5, {1, 2, 3, 4});
  auto ms = multiset_wbar(w);
  CHECK(ms.r == 5);
  REQUIRE(ms.counts.size() == 6);
  std::vector<std::pair<int, int>> expect = {{1, 2}, {1, 3}, {1, 4},
                                             {2, 3}, {2, 4}, {3, 4}};
  for (size_t q = 0; q < expect.size(); ++q)
    CHECK(ms.counts[q].first == expect[q]);
  CHECK(ms.raw_lengths.empty());  // raw lengths only for two-level vectors

  const auto* c12 = ms.find(1, 2);
  REQUIRE(c12 != nullptr);
  CHECK(*c12 == pair_multiset_closed_form(5, 1, 2));
  CHECK(*ms.find(3, 4) == pair_multiset_closed_form(5, 3, 4));
  CHECK(ms.find(2, 1) == nullptr);
  CHECK(ms.find(1, 5) == nullptr);

  // Consecutive pairs have no interior levels, so the closed form applies.
  for (int s = 1; s <= 3; ++s)
    CHECK(*ms.find(s, s + 1) ==
          pair_multiset_closed_form(5, w.weights[s - 1], w.weights[s]));
}

TEST_CASE("two-level multisets keep sorted raw lengths") {
  auto ms = multiset_wbar(WeightVector(5, {1, 3}));
  auto xs = xi_sequence(5, 1, 3);
  std::sort(xs.begin(), xs.end());
  CHECK(ms.raw_lengths == xs);
  CHECK(std::is_sorted(ms.raw_lengths.begin(), ms.raw_lengths.end()));
}

TEST_CASE("total path counts separate reordered weight vectors") {
  auto total = [](const WeightVector& w) {
    // number of admissible paths across the full span, first to last level
    auto counts = *multiset_wbar(w).find(1, w.levels());
    return std::accumulate(counts.begin(), counts.end(), i64{0});
  };
  CHECK(total(WeightVector(5, {1, 2, 3, 4})) == 45);
  CHECK(total(WeightVector(5, {1, 2, 4, 3})) == 40);
  CHECK(!wbar_equal(WeightVector(5, {1, 2, 3, 4}), WeightVector(5, {1, 2, 4, 3})));
  CHECK(wbar_equal(WeightVector(5, {1, 2, 3, 4}), WeightVector(5, {1, 2, 3, 4})));
  CHECK_THROWS_WITH_AS(wbar_equal(WeightVector(5, {1, 3}), WeightVector(7, {1, 3})),
                       "weight vectors must share modulus and length",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      wbar_equal(WeightVector(5, {1, 3}), WeightVector(5, {1, 2, 3})),
      "weight vectors must share modulus and length", std::invalid_argument);
}

TEST_CASE("three-level outer dwells determine the middle dwell uniquely") {
  WeightVector w(7, {1, 5, 3});
  int admissible_count = 0;
  std::set<std::vector<i64>> decomposed;
  for (i64 t1 = 0; t1 < 7; ++t1) {
    for (i64 t3 = 0; t3 < 7; ++t3) {
      auto d = triple_decompose(w, t1, t3);
      CHECK(mod_reduce(1 * (t1 + 1) + 5 * d.t2p, 7) == 0);
      CHECK(mod_reduce(5 * (d.t2pp + 1) + 3 * t3, 7) == 0);
      CHECK(d.t2 == mod_reduce(d.t2p + d.t2pp, 7));
      CHECK(d.admissible == (d.t2p + d.t2pp >= 7));
      if (d.admissible) {
        ++admissible_count;
        decomposed.insert({t1, d.t2, t3});
      }
    }
  }
  CHECK(admissible_count == 21);  // r(r-1)/2

  // The admissible outer pairs are exactly the full-chain paths.
  std::set<std::vector<i64>> enumerated;
  for (const auto& p : enumerate_admissible(w, 1, 3))
    if (p.chain == std::vector<int>{1, 2, 3})
      enumerated.insert({p.loops[0], p.loops[1], p.loops[2]});
  CHECK(decomposed == enumerated);

  CHECK_THROWS_WITH_AS(triple_decompose(WeightVector(5, {1, 3}), 0, 0),
                       "weight vector must have 3 levels",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(triple_decompose(w, -1, 0),
                       "dwell counts must lie in 0..r-1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(triple_decompose(w, 0, 7),
                       "dwell counts must lie in 0..r-1",
                       std::invalid_argument);
}

TEST_CASE("pairing certificate matches lengths mod r across a bijection") {
  WeightVector m(5, {1, 3}), n(5, {2, 3});
  auto cert = d3_certificate(m, n);
  REQUIRE(cert.size() == 5);

  std::set<PathKey> froms, tos;
  for (const auto& e : cert) {
    froms.insert(key_of(e.from));
    tos.insert(key_of(e.to));
    CHECK(mod_reduce(e.from.length - e.to.length, 5) == 0);
    CHECK(e.from.length - e.to.length == 5 * e.ell);
  }
  CHECK(froms == key_set(enumerate_admissible(m, 1, 2)));
  CHECK(tos == key_set(enumerate_admissible(n, 1, 2)));

  bool saw_frozen = false;
  for (const auto& e : cert) {
    if (e.from.loops == std::vector<i64>{1, 1}) {
      CHECK(e.to.loops == std::vector<i64>{3, 4});
      CHECK(e.ell == -1);
      saw_frozen = true;
    }
  }
  CHECK(saw_frozen);
}

TEST_CASE("pairing certificate rejects mismatched inputs") {
  CHECK_THROWS_WITH_AS(d3_certificate(WeightVector(5, {1, 3}), WeightVector(5, {2, 2})),
                       "no equivariant pairing exists", std::invalid_argument);
  CHECK_THROWS_WITH_AS(d3_certificate(WeightVector(5, {1, 3}), WeightVector(7, {1, 3})),
                       "pairing needs two-level weight vectors over one modulus",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      d3_certificate(WeightVector(5, {1, 2, 3}), WeightVector(5, {1, 2, 4})),
      "pairing needs two-level weight vectors over one modulus",
      std::invalid_argument);
}

TEST_CASE("path enumeration validates its level range") {
  WeightVector w(5, {1, 3});
  CHECK_THROWS_WITH_AS(enumerate_admissible(w, 2, 2),
                       "need levels 1 <= s < t <= k+1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_admissible(w, 0, 1),
                       "need levels 1 <= s < t <= k+1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(enumerate_admissible(w, 1, 3),
                       "need levels 1 <= s < t <= k+1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(transfer_count(w, 1, 3),
                       "need levels 1 <= s < t <= k+1", std::invalid_argument);
}
