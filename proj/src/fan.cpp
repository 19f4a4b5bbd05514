#include "toricpair/fan.hpp"

#include "toricpair/error.hpp"

#include <algorithm>

namespace toricpair {

namespace {

std::vector<LatticePoint> tight_rays(const Cone& c, const LatticePoint& normal) {
  std::vector<LatticePoint> out;
  for (const LatticePoint& r : c.rays())
    if (dot(normal, r) == 0) out.push_back(r);
  return out;
}

// Joins of apex with every facet of c that does not contain it.
std::vector<Cone> cone_over_far_facets(const Cone& c, const LatticePoint& apex) {
  std::vector<Cone> out;
  for (const LatticePoint& u : c.facet_normals()) {
    if (dot(u, apex) == 0) continue;
    std::vector<LatticePoint> gens = tight_rays(c, u);
    gens.push_back(apex);
    out.push_back(Cone::from_generators(c.ambient_rank(), gens));
  }
  return out;
}

Fan replace_cones_through(const Fan& f, const LatticePoint& apex) {
  std::vector<Cone> cones;
  for (const Cone& c : f.maximal_cones()) {
    if (!c.contains(apex) || (c.is_simplicial() && c.has_ray(apex))) {
      cones.push_back(c);
      continue;
    }
    for (Cone& piece : cone_over_far_facets(c, apex)) cones.push_back(std::move(piece));
  }
  return Fan::from_cones(f.ambient_rank(), std::move(cones));
}

Cone hull(const Fan& f) { return Cone::from_generators(f.ambient_rank(), f.rays()); }

// A pure fan covers the cone spanned by its rays iff each facet of a maximal
// cone either lies on the boundary of that hull or is shared with another
// maximal cone.
bool covers_hull(const Fan& f) {
  const Cone h = hull(f);
  for (const Cone& c : f.maximal_cones())
    if (c.dimension() != h.dimension()) return false;
  for (const Cone& c : f.maximal_cones()) {
    for (const LatticePoint& u : c.facet_normals()) {
      const Cone facet = Cone::from_generators(f.ambient_rank(), tight_rays(c, u));
      const bool on_boundary = std::any_of(h.facet_normals().begin(), h.facet_normals().end(),
                                           [&](const LatticePoint& hu) { return tight_rays(facet, hu).size() == facet.rays().size(); });
      if (on_boundary) continue;
      const bool shared = std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                                      [&](const Cone& other) { return !(other == c) && other.contains(facet); });
      if (!shared) return false;
    }
  }
  return true;
}

bool covered_by(const Fan& a, const Fan& b) {
  for (const Cone& c : a.maximal_cones()) {
    if (!b.contains(c.interior_point())) return false;
    for (const LatticePoint& r : c.rays())
      if (!b.contains(r)) return false;
  }
  return true;
}

}  // namespace

Fan Fan::from_cones(Index ambient_rank, std::vector<Cone> cones) {
  for (const Cone& c : cones)
    if (c.ambient_rank() != ambient_rank) throw InvalidInput("cone " + to_string(c) + " has the wrong ambient rank");
  std::sort(cones.begin(), cones.end(), cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  Fan f;
  f.ambient_rank_ = ambient_rank;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones.size() && maximal; ++j)
      if (i != j && cones[j].contains(cones[i])) maximal = false;
    if (maximal) f.maximal_.push_back(cones[i]);
  }
  std::vector<LatticePoint> rays;
  for (const Cone& c : f.maximal_)
    for (const LatticePoint& r : c.rays()) rays.push_back(r);
  f.rays_ = sorted_unique(std::move(rays));
  return f;
}

Fan Fan::face_fan(const Cone& c) { return from_cones(c.ambient_rank(), {c}); }

std::vector<Cone> Fan::cones() const {
  std::vector<Cone> out;
  for (const Cone& c : maximal_)
    for (Cone& f : faces(c)) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return cone_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Fan::contains(const LatticePoint& v) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Cone& c) { return c.contains(v); });
}

bool Fan::is_smooth() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return toricpair::is_smooth(c); });
}

bool operator==(const Fan& a, const Fan& b) { return a.ambient_rank_ == b.ambient_rank_ && a.maximal_ == b.maximal_; }

Cone smallest_containing_cone(const Fan& f, const LatticePoint& v) {
  for (const Cone& c : f.maximal_cones())
    if (c.contains(v)) return minimal_face_containing(c, v);
  throw InvalidInput("point outside fan support");
}

Fan star_subdivide(const Fan& f, const LatticePoint& v) {
  if (v.size() != f.ambient_rank() || !is_primitive(v))
    throw InvalidInput("subdivision point " + to_string(v) + " is not a primitive lattice vector");
  if (!f.contains(v)) throw InvalidInput("point outside fan support");
  if (f.has_ray(v)) return f;
  return replace_cones_through(f, v);
}

Fan pull(const Fan& f, const LatticePoint& r) {
  if (!f.has_ray(r)) throw InvalidInput("pulling point " + to_string(r) + " is not a ray of the fan");
  return replace_cones_through(f, r);
}

Fan pulling_triangulation(const Fan& f, std::span<const LatticePoint> order) {
  Fan out = f;
  for (const LatticePoint& r : order)
    if (out.has_ray(r)) out = pull(out, r);
  // Pulling every ray yields a triangulation; this loop only guards against
  // an order that omits rays.
  for (;;) {
    const auto it = std::find_if(out.maximal_cones().begin(), out.maximal_cones().end(),
                                 [](const Cone& c) { return !c.is_simplicial(); });
    if (it == out.maximal_cones().end()) return out;
    out = pull(out, it->rays().front());
  }
}

bool same_support(const Fan& f1, const Fan& f2) {
  if (f1.ambient_rank() != f2.ambient_rank()) return false;
  if (!(hull(f1) == hull(f2))) return false;
  if (covers_hull(f1) && covers_hull(f2)) return true;
  return covered_by(f1, f2) && covered_by(f2, f1);
}

bool refines(const Fan& f1, const Fan& f2) {
  if (!same_support(f1, f2)) throw InvalidInput("fans have different supports");
  for (const Cone& c : f1.maximal_cones()) {
    const bool inside = std::any_of(f2.maximal_cones().begin(), f2.maximal_cones().end(),
                                    [&](const Cone& d) { return d.contains(c); });
    if (!inside) return false;
  }
  return true;
}

bool is_well_formed(const Fan& f) {
  const auto& cones = f.maximal_cones();
  for (const Cone& c : cones)
    if (!c.is_pointed()) return false;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Cone meet = intersect(cones[i], cones[j]);
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) return false;
    }
  return true;
}

std::string to_string(const Fan& f) {
  std::string s = "fan[";
  for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
    if (i) s += ", ";
    s += to_string(f.maximal_cones()[i]);
  }
  return s + "]";
}

}  // namespace toricpair
