#pragma once
// Decision procedures for the proven low-dimension cases, side-by-side
// condition reports, exhaustive searches over normalized weight-vector pairs,
// window-pattern extraction with its regular-language check, and JSON/CSV
// serialization of the results.

#include <optional>
#include <string>
#include <vector>

#include "qlens/blockmat.hpp"
#include "qlens/paths.hpp"
#include "qlens/residue.hpp"

namespace qlens {

enum class TriState { no, yes, skipped };
const char* to_string(TriState s);

// Two-level case: equivalent exactly when gcd(m2 - m1, r) = gcd(n2 - n1, r);
// the certificate pairs up generator paths with matching reduced lengths.
struct D3Decision {
  bool equivalent = false;
  std::vector<CertEntry> certificate;  // populated when equivalent
};
D3Decision decide_d3(const WeightVector& m, const WeightVector& n);

// Three-level case over a prime modulus: equivalent exactly when both weight
// vectors have three pairwise-distinct entries, or one is a unit multiple of
// the other. Throws std::invalid_argument("theorem scope") for composite r.
bool decide_d5_prime(const WeightVector& m, const WeightVector& n);

// All entries pairwise distinct in both vectors with equal gcd chains, or a
// unit-multiple relation.
bool condition_vi(const WeightVector& m, const WeightVector& n);

struct ConditionReport {
  WeightVector m, n;
  bool cond_v = false;    // reduced path multisets agree for every level pair
  bool cond_vi = false;   // distinctness + gcd chain, or unit scaling
  bool cond_vii = false;  // deterministic intertwiner construction succeeds
  TriState dq1_witness = TriState::skipped;  // witness fixes the residue-0 sum
  TriState extended_iv = TriState::skipped;  // some intertwiner exists (search)
  bool extended_truncated = false;           // search stopped on budget
  std::optional<std::string> pattern;        // window pattern, moduli 5 and 8
  bool unclassified_window = false;          // pattern lookup left the table

  ConditionReport(WeightVector m_, WeightVector n_);
};

// Evaluate every condition on one pair. extended_budget = 0 skips the
// exponent-tuple search; otherwise at most that many tuples are tried per
// mode, and a truncated search leaves extended_iv skipped with the flag set.
ConditionReport compare_conditions(const WeightVector& m, const WeightVector& n,
                                   unsigned long long extended_budget = 0);

// Slide a 4-entry window over both tuples, rescale each window to leading
// entry 1, and type the unordered pair against the nontrivial-solution table;
// one symbol per window position. Throws std::invalid_argument
// ("unclassified window") when a pair is not in the table.
std::string extract_pattern(const WeightVector& m, const WeightVector& n);

// Membership of the symbol string (or its reversal) in the conjectured
// regular language: 0* | 0*1 | 0*(10(00)*)*0* | 0*20* | 0*30* for modulus 5,
// the first three alternatives for modulus 8.
bool pattern_in_language(const std::string& p, i64 r);

// All unit tuples with first entry 1, lexicographically ordered: one
// representative per scaling orbit.
std::vector<WeightVector> normalized_tuples(i64 r, int k);

struct SearchOptions {
  bool cond_v = true, cond_vi = true, cond_vii = true;  // emission criteria
  unsigned long long extended_budget = 0;  // per-pair exponent-tuple budget
  unsigned long long pair_budget = 0;      // 0 = no limit on pairs examined
  int workers = 0;                         // 0 = hardware concurrency
};

struct SearchResult {
  std::vector<ConditionReport> reports;  // sorted by tuple order, stable
  unsigned long long tuples = 0;
  unsigned long long pairs_examined = 0;
  bool truncated = false;  // pair budget cut the enumeration short
};

// Evaluate all unordered pairs of normalized tuples; emit a report exactly
// when one of the requested conditions holds on the pair. Worker threads
// never change the output bytes.
SearchResult search_pairs(i64 r, int k, const SearchOptions& opt = {});

std::string report_to_json(const ConditionReport& rep);
std::string reports_to_csv(const std::vector<ConditionReport>& reps);
std::string h_to_json(const BlockMat& H);
std::string multiset_to_json(const PathMultiset& ms);
std::string certificate_to_json(const std::vector<CertEntry>& cert);

}  // namespace qlens
