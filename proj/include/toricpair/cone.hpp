#pragma once

#include "toricpair/scalar.hpp"

#include <span>
#include <vector>

namespace toricpair {

/// A rational polyhedral cone in N_R = R^n, kept in both descriptions.
///
/// Generators: primitive, irredundant, lexicographically sorted. A cone with
/// a lineality space L lists a canonical basis of L together with its
/// negatives, plus the extreme rays of C ∩ L^⊥.
/// Inequalities: primitive inner facet normals u (⟨u,x⟩ ≥ 0 on C) lying in
/// the linear span of C, plus a canonical basis of span(C)^⊥ as equations.
/// Both are computed eagerly, so a Cone is immutable and thread-compatible.
class Cone {
 public:
  /// The zero cone in R^0.
  Cone() = default;

  static Cone from_generators(Index ambient_rank, std::span<const LatticePoint> generators);
  static Cone from_generators(Index ambient_rank, std::initializer_list<LatticePoint> generators);
  /// {x : ⟨u, x⟩ ≥ 0 for every u in normals}
  static Cone from_inequalities(Index ambient_rank, std::span<const LatticePoint> normals);
  static Cone zero(Index ambient_rank);
  static Cone orthant(Index ambient_rank);

  Index ambient_rank() const { return ambient_rank_; }
  Index dimension() const { return ambient_rank_ - static_cast<Index>(equations_.size()); }
  const std::vector<LatticePoint>& rays() const { return rays_; }
  const std::vector<LatticePoint>& facet_normals() const { return facets_; }
  const std::vector<LatticePoint>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_dimension_ == 0; }
  bool is_full_dimensional() const { return equations_.empty(); }
  bool is_simplicial() const;

  bool contains(const LatticePoint& v) const;
  bool contains(const Cone& other) const;
  bool contains_in_relative_interior(const LatticePoint& v) const;
  bool has_ray(const LatticePoint& v) const;

  /// Index of the sublattice spanned by the rays inside span(C) ∩ N.
  /// Requires a simplicial cone.
  Integer multiplicity() const;

  /// Sum of the generators; lies in the relative interior.
  LatticePoint interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  Index ambient_rank_ = 0;
  Index lineality_dimension_ = 0;
  std::vector<LatticePoint> rays_;
  std::vector<LatticePoint> facets_;
  std::vector<LatticePoint> equations_;
};

bool cone_less(const Cone& a, const Cone& b);

/// Canonical inequality description of cone(generators): equations spanning
/// span^⊥ and primitive facet normals inside the span. Exposed for testing.
struct HalfspaceDescription {
  std::vector<LatticePoint> equations;
  std::vector<LatticePoint> inequalities;
};
HalfspaceDescription describe(Index ambient_rank, std::span<const LatticePoint> generators);

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);

/// True when every maximal minor gcd of the ray matrix is 1 and the rays are
/// linearly independent; requires (and reports false without) strong convexity.
bool is_smooth(const Cone& c);

/// All faces of c, from {0} (or the lineality space) up to c itself.
std::vector<Cone> faces(const Cone& c);
bool is_face_of(const Cone& face, const Cone& c);
/// The smallest face of c containing v in its relative interior; v must lie in c.
Cone minimal_face_containing(const Cone& c, const LatticePoint& v);

/// Minimal generating set of the semigroup c ∩ N; c must be strongly convex.
std::vector<LatticePoint> hilbert_basis(const Cone& c);

/// Pulling triangulation with no new rays; c must be strongly convex.
std::vector<Cone> triangulate(const Cone& c);

/// Lattice points of the half-open fundamental parallelepiped of a simplicial
/// cone (zero included).
std::vector<LatticePoint> parallelepiped_points(const Cone& c);

/// Nonzero v ∈ c ∩ N with ‖v‖∞ ≤ bound, lexicographically ordered.
std::vector<LatticePoint> enumerate_box(const Cone& c, long bound);

std::string to_string(const Cone& c);

}  // namespace toricpair
