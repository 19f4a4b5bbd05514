#pragma once

// Monomial ideals on an affine toric variety X_σ, their Newton polyhedra and
// the normal fan of the Newton polyhedron inside σ.

#include "toricpair/fan.hpp"

#include <span>
#include <vector>

namespace toricpair {

/// A monomial ideal given by minimal exponents in σ^∨ ∩ M. Built with
/// make_ideal, which validates and minimalizes.
class MonomialIdeal {
 public:
  const Cone& sigma() const { return sigma_; }
  const Cone& dual_cone() const { return dual_; }
  const std::vector<LatticePoint>& exponents() const { return exponents_; }
  Index ambient_rank() const { return sigma_.ambient_rank(); }

  friend MonomialIdeal make_ideal(std::span<const LatticePoint> exponents, const Cone& sigma);
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  Cone sigma_;
  Cone dual_;
  std::vector<LatticePoint> exponents_;
};

/// Throws InvalidInput when σ is not strongly convex and full-dimensional,
/// when an exponent is zero or lies outside σ^∨, or when some non-smooth face
/// of σ is not contained in the zero locus of the ideal.
MonomialIdeal make_ideal(std::span<const LatticePoint> exponents, const Cone& sigma);

/// min over exponents a of ⟨v, a⟩, for v ∈ σ.
Integer ord(const LatticePoint& v, const MonomialIdeal& ideal);

/// ord vanishes on the relative interior of tau iff some exponent is
/// orthogonal to every ray of tau.
bool ord_vanishes_on(const Cone& tau, const MonomialIdeal& ideal);

struct NewtonPolyhedron {
  std::vector<LatticePoint> vertices;
  Cone recession_cone;
};

NewtonPolyhedron newton_vertices(const MonomialIdeal& ideal);

/// Normal fan of the Newton polyhedron, restricted to σ. The i-th maximal
/// cone is where the i-th entry of `vertices` attains ord.
struct DualFan {
  Fan fan;
  std::vector<LatticePoint> vertices;

  /// Vertices attaining ord on all of the cone (its face of Γ₊).
  std::vector<LatticePoint> face_of(const Cone& tau) const;
  /// The vertex attaining ord on a cone that lies inside some maximal cone.
  const LatticePoint& vertex_for(const Cone& tau) const;
};

DualFan dual_fan(const MonomialIdeal& ideal);

}  // namespace toricpair
