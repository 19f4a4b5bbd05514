#include "toricpair/newton.hpp"

#include "toricpair/error.hpp"

#include <algorithm>

namespace toricpair {

namespace {

Integer min_pairing(const LatticePoint& v, const std::vector<LatticePoint>& exponents) {
  Integer best = dot(v, exponents.front());
  for (std::size_t i = 1; i < exponents.size(); ++i) best = std::min(best, dot(v, exponents[i]));
  return best;
}

// {v ∈ σ : ⟨v, b - a⟩ ≥ 0 for every b in others}
Cone normal_cone(const Cone& sigma, const LatticePoint& a, const std::vector<LatticePoint>& others) {
  std::vector<LatticePoint> normals = sigma.facet_normals();
  for (const LatticePoint& b : others)
    if (!equal(a, b)) normals.push_back(b - a);
  return Cone::from_inequalities(sigma.ambient_rank(), normals);
}

}  // namespace

MonomialIdeal make_ideal(std::span<const LatticePoint> exponents, const Cone& sigma) {
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw InvalidInput("cone " + to_string(sigma) + " is not strongly convex and full-dimensional");
  if (exponents.empty()) throw InvalidInput("ideal needs at least one exponent");
  const Index n = sigma.ambient_rank();
  for (const LatticePoint& a : exponents) {
    if (a.size() != n)
      throw InvalidInput("exponent " + to_string(a) + " does not have length " + std::to_string(n));
    if (is_zero(a)) throw InvalidInput("unit ideal: the zero exponent generates the whole ring");
    for (const LatticePoint& r : sigma.rays())
      if (dot(r, a) < 0) throw InvalidInput("exponent not in dual cone: " + to_string(a));
  }

  MonomialIdeal ideal;
  ideal.sigma_ = sigma;
  ideal.dual_ = toricpair::dual_cone(sigma);
  const std::vector<LatticePoint> all = sorted_unique(std::vector<LatticePoint>(exponents.begin(), exponents.end()));
  for (const LatticePoint& a : all) {
    const bool redundant = std::any_of(all.begin(), all.end(), [&](const LatticePoint& b) {
      return !equal(a, b) && ideal.dual_.contains(LatticePoint(a - b));
    });
    if (!redundant) ideal.exponents_.push_back(a);
  }

  for (const Cone& tau : faces(sigma))
    if (!is_smooth(tau) && ord_vanishes_on(tau, ideal))
      throw InvalidInput("singular locus not contained in Z: ord vanishes on face " + to_string(tau));
  return ideal;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.sigma_ == b.sigma_) || a.exponents_.size() != b.exponents_.size()) return false;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i)
    if (!equal(a.exponents_[i], b.exponents_[i])) return false;
  return true;
}

Integer ord(const LatticePoint& v, const MonomialIdeal& ideal) {
  if (!ideal.sigma().contains(v)) throw InvalidInput("point " + to_string(v) + " is not in the cone");
  return min_pairing(v, ideal.exponents());
}

bool ord_vanishes_on(const Cone& tau, const MonomialIdeal& ideal) {
  return std::any_of(ideal.exponents().begin(), ideal.exponents().end(), [&](const LatticePoint& a) {
    return std::all_of(tau.rays().begin(), tau.rays().end(), [&](const LatticePoint& r) { return dot(r, a) == 0; });
  });
}

// A minimal exponent a is a vertex of Γ₊ iff the set of v ∈ σ on which a
// attains ord is full-dimensional.
NewtonPolyhedron newton_vertices(const MonomialIdeal& ideal) {
  NewtonPolyhedron p{{}, ideal.dual_cone()};
  for (const LatticePoint& a : ideal.exponents())
    if (normal_cone(ideal.sigma(), a, ideal.exponents()).is_full_dimensional()) p.vertices.push_back(a);
  return p;
}

DualFan dual_fan(const MonomialIdeal& ideal) {
  const NewtonPolyhedron p = newton_vertices(ideal);
  std::vector<Cone> cones;
  for (const LatticePoint& a : p.vertices) cones.push_back(normal_cone(ideal.sigma(), a, p.vertices));
  DualFan out{Fan::from_cones(ideal.ambient_rank(), std::move(cones)), {}};
  for (const Cone& c : out.fan.maximal_cones()) {
    const LatticePoint v = c.interior_point();
    const Integer m = min_pairing(v, p.vertices);
    for (const LatticePoint& a : p.vertices)
      if (dot(v, a) == m) {
        out.vertices.push_back(a);
        break;
      }
  }
  return out;
}

std::vector<LatticePoint> DualFan::face_of(const Cone& tau) const {
  const LatticePoint v = tau.interior_point();
  const Integer m = min_pairing(v, vertices);
  std::vector<LatticePoint> out;
  for (const LatticePoint& a : vertices)
    if (dot(v, a) == m) out.push_back(a);
  return sorted_unique(std::move(out));
}

const LatticePoint& DualFan::vertex_for(const Cone& tau) const {
  const auto& cones = fan.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].contains(tau)) return vertices[i];
  throw InvalidInput("cone " + to_string(tau) + " is not inside a cone of the dual fan");
}

}  // namespace toricpair
