#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctn/tnorm.hpp"

namespace ctn {

/// Restriction of the relational structure (<, R_P, R_Ł, R_M) to {0..size−1}.
/// Index n is active when it is the least enumeration index of some
/// signature entry; inactive indices carry no relation.
struct L1Structure {
  std::uint64_t size = 0;
  std::vector<std::uint64_t> rp, rl, rm;  // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> less;  // sorted
  bool qualified = false;  // some lazy locate stayed unresolved

  bool operator==(const L1Structure&) const = default;
};

/// Structural route: place q_n in its signature entry and keep n iff it is
/// the entry's least index (open bounds for P/L, closed for M).
L1Structure theta(const TNorm& t, std::uint64_t size);

struct LemmaTheta {
  L1Structure structure;
  /// Non-empty when a bound was too small to settle some condition.
  std::vector<std::string> indeterminate;
};

/// Bounded-quantifier route through idempotency and power conditions only:
/// powers up to `power_bound` (closed form beyond), scans over rationals of
/// denominator ≤ `denominator_bound`. Finite presentations only.
LemmaTheta theta_via_lemma(const TNorm& t, std::uint64_t size, std::uint64_t power_bound,
                           std::uint64_t denominator_bound);

/// Isomorphism of equal-size, unqualified truncations by canonical form: the
/// label sequence of active indices in `less` order plus the inactive count.
/// Throws std::invalid_argument on size mismatch or qualified input.
bool l1_iso_finite(const L1Structure& a, const L1Structure& b);

struct SubbasisPredicates {
  bool v_qn = false;  // q_n idempotent
  bool u_mn = false;  // q_m * q_n = min(q_m, q_n)
  bool w_mn = false;  // q_m < q_n
};

/// Finite presentations only (std::logic_error otherwise).
SubbasisPredicates subbasis_predicates(const TNorm& t, std::uint64_t m, std::uint64_t n);

/// Empty when the relations are disjoint, `less` is a strict linear order
/// on the active set and respects the enumeration values.
std::string l1_invariant_violation(const L1Structure& s);

/// "l1 v1 n=<N> qualified=<bool>", "rp: ...", "rl: ...", "rm: ...", then one
/// "less: m n" line per pair.
std::string dump_l1(const L1Structure& s);

}  // namespace ctn
