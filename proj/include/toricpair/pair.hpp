#pragma once

// Invariants of a toric pair (X_σ, Z = V(𝔞)): the Q-Gorenstein weight,
// log-discrepancies of toric divisors, the minimal log-discrepancy and the
// log-canonical / log-terminal classification.

#include "toricpair/newton.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricpair {

/// The covector w with ⟨ρ, w⟩ = 1 on every ray of σ, and the least r with
/// r·w integral (the index of K_X).
struct QGorensteinData {
  RationalVector weight;
  Integer index;
};

/// nullopt when no such w exists. σ must be strongly convex and
/// full-dimensional.
std::optional<QGorensteinData> qgorenstein(const Cone& sigma);

/// Validated pair plus everything downstream code asks for repeatedly: the
/// dual fan and the Hilbert bases of σ and of each maximal dual-fan cone.
/// Copies share the same immutable data.
class ToricPair {
 public:
  explicit ToricPair(MonomialIdeal ideal);
  static ToricPair make(const Cone& sigma, std::span<const LatticePoint> exponents);

  const Cone& sigma() const { return data_->ideal.sigma(); }
  const MonomialIdeal& ideal() const { return data_->ideal; }
  Index rank() const { return sigma().ambient_rank(); }

  const std::optional<QGorensteinData>& qg() const { return data_->qg; }
  /// Throws NotQGorenstein.
  const QGorensteinData& require_qg() const;

  const DualFan& dual() const { return data_->dual; }
  const std::vector<LatticePoint>& sigma_hilbert_basis() const { return data_->sigma_hb; }
  /// Aligned with dual().fan.maximal_cones().
  const std::vector<std::vector<LatticePoint>>& cone_hilbert_bases() const { return data_->cone_hb; }

 private:
  struct Data {
    MonomialIdeal ideal;
    std::optional<QGorensteinData> qg;
    DualFan dual;
    std::vector<LatticePoint> sigma_hb;
    std::vector<std::vector<LatticePoint>> cone_hb;
  };
  std::shared_ptr<const Data> data_;
};

/// ⟨v, w⟩ − ord(v) for any v ∈ σ ∩ N. This is a(D_v) when v is primitive
/// and is linear on every cone of the dual fan.
Rational discrepancy_function(const LatticePoint& v, const ToricPair& pair);

/// a(D_v; X, Z) for a primitive nonzero v ∈ σ. Throws InvalidInput on bad v
/// and NotQGorenstein without QG data.
Rational log_discrepancy(const LatticePoint& v, const ToricPair& pair);

enum class MldKind { Finite, MinusInfinity };

struct MldResult {
  MldKind kind = MldKind::Finite;
  /// The mld when finite; a(witness) < 0 otherwise.
  Rational value;
  LatticePoint witness;

  bool finite() const { return kind == MldKind::Finite; }
};

/// Exact mld via ray signs and Hilbert bases of the dual-fan cones.
MldResult mld(const ToricPair& pair);

/// Minimum of a over the nonzero points of σ ∩ [-bound, bound]^n; −∞ as soon
/// as some value is negative. The witness is primitive: lexicographically
/// first among the minimizers (the most negative ones in the −∞ case).
MldResult brute_force_mld(const ToricPair& pair, long bound);

enum class LcClass { LogTerminal, LogCanonicalNotLt, NotLogCanonical };

struct LcClassification {
  LcClass cls = LcClass::LogTerminal;
  /// r·a(D_v) for each ray v of the dual fan, in ray order.
  std::vector<std::pair<LatticePoint, Integer>> l_coefficients;
  /// Rays with negative / positive coefficient; filled only when not lc.
  std::vector<LatticePoint> d_part;
  std::vector<LatticePoint> dprime_part;
};

LcClassification classify(const ToricPair& pair);

std::string to_string(MldKind k);
std::string to_string(LcClass c);

}  // namespace toricpair
