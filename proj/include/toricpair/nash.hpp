#pragma once

// Z-Nash and log-Nash divisors of a toric pair as minimal elements of
//   S = {v ∈ σ ∩ N, v ≠ 0 : ord(v) ≥ 1}
// under two orders:
//   σ-order:   u ≼ v  iff  v − u ∈ σ
//   fan order: u ≼ v  iff  u, v, v − u lie in one cone of the dual fan.
//
// Every minimal element lies in the Hilbert basis of each maximal dual-fan
// cone τ containing it: writing v = h + r with h ∈ HB(τ), r ∈ τ ∩ N ∖ 0, ord
// is additive on τ, so ord(h) ≥ 1 or ord(r) ≥ 1 and that summand lies below
// v in both orders. Candidates are therefore finite and independent of any
// enumeration bound.

#include "toricpair/pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricpair {

enum class NashFlavor { ZNash, LogNash };

struct DivisorSet {
  std::vector<LatticePoint> members;
  NashFlavor flavor = NashFlavor::ZNash;
  long bound = 0;
  bool certified = false;
};

/// Largest coordinate (in absolute value) over the exponents and the Hilbert
/// bases of the maximal dual-fan cones. Every minimal element lies in the
/// box of this size.
long certified_bound(const ToricPair& pair);

/// Minimal elements with ‖v‖∞ ≤ bound; certified iff bound ≥ certified_bound.
DivisorSet z_nash(const ToricPair& pair, long bound);
DivisorSet log_nash(const ToricPair& pair, long bound);
DivisorSet z_nash(const ToricPair& pair);
DivisorSet log_nash(const ToricPair& pair);

/// Local minimality tests (v ∈ S assumed by the callers that need it).
bool is_z_minimal(const LatticePoint& v, const ToricPair& pair);
bool is_log_minimal(const LatticePoint& v, const ToricPair& pair);

struct Verdict {
  bool holds = false;
  std::optional<LatticePoint> witness;
  std::optional<Rational> value;
  /// Points left out of the assertion (mld witnesses with ord 0).
  std::vector<LatticePoint> excluded;
  /// Points violating the assertion.
  std::vector<LatticePoint> offenders;
};

/// Some log-Nash divisor attains the (finite) mld. Throws PreconditionError
/// when the mld is −∞.
Verdict check_lognash_computes_mld(const ToricPair& pair);

/// Some log-Nash divisor has negative log-discrepancy, located among the
/// negative rays of the dual fan. Throws PreconditionError when the mld is
/// finite.
Verdict check_negative_lognash(const ToricPair& pair);

/// Every primitive v in the box with a(v) = mld and ord(v) ≥ 1 is log-Nash;
/// witnesses with ord(v) = 0 are listed in `excluded`. Throws
/// PreconditionError when the mld is −∞.
Verdict check_all_mld_witnesses_lognash(const ToricPair& pair, long bound);

std::string to_string(NashFlavor f);

}  // namespace toricpair
