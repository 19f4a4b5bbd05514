#pragma once

#include "toricpair/cone.hpp"

#include <span>
#include <string>
#include <vector>

namespace toricpair {

/// A fan, stored by its maximal cones in canonical (cone_less) order.
/// Lower-dimensional cones are faces of those and are produced on demand.
class Fan {
 public:
  Fan() = default;

  /// Cones contained in another listed cone are dropped; the caller is
  /// responsible for the listed cones meeting along common faces.
  static Fan from_cones(Index ambient_rank, std::vector<Cone> cones);
  /// The fan of all faces of c.
  static Fan face_fan(const Cone& c);

  Index ambient_rank() const { return ambient_rank_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  const std::vector<LatticePoint>& rays() const { return rays_; }
  std::vector<Cone> cones() const;

  /// Support membership.
  bool contains(const LatticePoint& v) const;
  bool is_smooth() const;
  bool has_ray(const LatticePoint& v) const { return contains_point(rays_, v); }

  friend bool operator==(const Fan& a, const Fan& b);

 private:
  Index ambient_rank_ = 0;
  std::vector<Cone> maximal_;
  std::vector<LatticePoint> rays_;
};

/// The unique cone of f with v in its relative interior.
Cone smallest_containing_cone(const Fan& f, const LatticePoint& v);

/// Star subdivision at a primitive v in the support. A v that is already a
/// ray leaves the fan unchanged.
Fan star_subdivide(const Fan& f, const LatticePoint& v);

/// Pulling refinement at an existing ray r: every maximal cone containing r
/// is replaced by the joins of r with its facets not containing r. No new
/// rays; on simplicial cones through r this is the identity.
Fan pull(const Fan& f, const LatticePoint& r);

/// Simplicial refinement without new rays, pulling the rays in the given order.
Fan pulling_triangulation(const Fan& f, std::span<const LatticePoint> order);

/// Whether every cone of f1 lies in a cone of f2. Throws InvalidInput when
/// the supports differ.
bool refines(const Fan& f1, const Fan& f2);

/// Whether two fans have the same support.
bool same_support(const Fan& f1, const Fan& f2);

/// Pairwise intersections of maximal cones are faces of both.
bool is_well_formed(const Fan& f);

std::string to_string(const Fan& f);

}  // namespace toricpair
