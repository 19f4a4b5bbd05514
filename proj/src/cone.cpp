#include "toricpair/cone.hpp"

#include "toricpair/error.hpp"
#include "toricpair/linalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace toricpair {

IntMatrix rows_matrix(const std::vector<LatticePoint>& rows, Index cols) {
  IntMatrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r].transpose();
  return m;
}

namespace {

void check_rank(Index ambient_rank, const LatticePoint& v) {
  if (v.size() != ambient_rank)
    throw InvalidInput("vector " + to_string(v) + " does not have length " + std::to_string(ambient_rank));
}

std::vector<LatticePoint> primitive_generators(Index ambient_rank, std::span<const LatticePoint> generators) {
  std::vector<LatticePoint> out;
  out.reserve(generators.size());
  for (const LatticePoint& g : generators) {
    check_rank(ambient_rank, g);
    if (!is_zero(g)) out.push_back(primitivize(g));
  }
  return sorted_unique(std::move(out));
}

// Calls fn with every size-r subset of {0, ..., k-1}, in lexicographic order.
void for_each_subset(std::size_t k, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > k) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == k - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<LatticePoint> with_negatives(const std::vector<LatticePoint>& basis) {
  std::vector<LatticePoint> out;
  for (const LatticePoint& b : basis) {
    out.push_back(b);
    out.push_back(-b);
  }
  return out;
}

std::vector<LatticePoint> tight_rays(const Cone& c, const LatticePoint& normal) {
  std::vector<LatticePoint> out;
  for (const LatticePoint& r : c.rays())
    if (dot(normal, r) == 0) out.push_back(r);
  return out;
}

// Z-basis (columns) of span(c) ∩ Z^n.
IntMatrix span_lattice_basis(const Cone& c) {
  if (c.equations().empty()) return IntMatrix::Identity(c.ambient_rank(), c.ambient_rank());
  return integer_kernel(rows_matrix(c.equations(), c.ambient_rank()));
}

LatticePoint coordinates_in(const IntMatrix& basis, const LatticePoint& v) {
  const auto x = solve(basis, v);
  if (!x) throw Error("point " + to_string(v) + " is not in the lattice span");
  LatticePoint out(x->size());
  for (Index i = 0; i < x->size(); ++i) {
    if (!is_integral((*x)(i))) throw Error("point " + to_string(v) + " is not in the lattice span");
    out(i) = boost::multiprecision::numerator((*x)(i));
  }
  return out;
}

}  // namespace

HalfspaceDescription describe(Index ambient_rank, std::span<const LatticePoint> generators) {
  const std::vector<LatticePoint> gens = primitive_generators(ambient_rank, generators);
  HalfspaceDescription out;
  if (gens.empty()) {
    for (Index i = 0; i < ambient_rank; ++i) out.equations.push_back(unit_point(ambient_rank, i));
    return out;
  }
  out.equations = sorted_unique(primitive_kernel(rows_matrix(gens, ambient_rank)));
  const Index dim = ambient_rank - static_cast<Index>(out.equations.size());

  // A facet is spanned by dim-1 independent generators; its normal is the
  // unique direction in span(C) orthogonal to them.
  std::vector<LatticePoint> facets;
  IntMatrix system(ambient_rank - 1, ambient_rank);
  for (std::size_t e = 0; e < out.equations.size(); ++e)
    system.row(dim - 1 + static_cast<Index>(e)) = out.equations[e].transpose();
  for_each_subset(gens.size(), static_cast<std::size_t>(dim - 1), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) system.row(static_cast<Index>(i)) = gens[idx[i]].transpose();
    const auto normal = primitive_kernel(system);
    if (normal.size() != 1) return;
    bool positive = false, negative = false;
    for (const LatticePoint& g : gens) {
      const Integer s = dot(normal[0], g);
      if (s > 0) positive = true;
      if (s < 0) negative = true;
      if (positive && negative) return;
    }
    facets.push_back(negative ? LatticePoint(-normal[0]) : normal[0]);
  });
  out.inequalities = sorted_unique(std::move(facets));
  return out;
}

Cone Cone::from_generators(Index ambient_rank, std::span<const LatticePoint> generators) {
  const std::vector<LatticePoint> gens = primitive_generators(ambient_rank, generators);
  HalfspaceDescription h = describe(ambient_rank, gens);
  Cone c;
  c.ambient_rank_ = ambient_rank;
  c.equations_ = std::move(h.equations);
  c.facets_ = std::move(h.inequalities);
  if (static_cast<Index>(gens.size()) == c.dimension()) {
    // Linearly independent generators are all extreme.
    c.rays_ = gens;
    return c;
  }
  // Extreme rays of C are the facet normals of its dual; the dual's
  // equations span the lineality space of C.
  std::vector<LatticePoint> dual_gens = c.facets_;
  for (const LatticePoint& e : with_negatives(c.equations_)) dual_gens.push_back(e);
  HalfspaceDescription hd = describe(ambient_rank, dual_gens);
  c.lineality_dimension_ = static_cast<Index>(hd.equations.size());
  std::vector<LatticePoint> rays = std::move(hd.inequalities);
  for (const LatticePoint& l : with_negatives(hd.equations)) rays.push_back(l);
  c.rays_ = sorted_unique(std::move(rays));
  return c;
}

Cone Cone::from_generators(Index ambient_rank, std::initializer_list<LatticePoint> generators) {
  return from_generators(ambient_rank, std::span<const LatticePoint>(generators.begin(), generators.size()));
}

Cone Cone::from_inequalities(Index ambient_rank, std::span<const LatticePoint> normals) {
  HalfspaceDescription h = describe(ambient_rank, normals);
  std::vector<LatticePoint> gens = std::move(h.inequalities);
  for (const LatticePoint& l : with_negatives(h.equations)) gens.push_back(l);
  return from_generators(ambient_rank, gens);
}

Cone Cone::zero(Index ambient_rank) { return from_generators(ambient_rank, std::span<const LatticePoint>{}); }

Cone Cone::orthant(Index ambient_rank) {
  std::vector<LatticePoint> gens;
  for (Index i = 0; i < ambient_rank; ++i) gens.push_back(unit_point(ambient_rank, i));
  return from_generators(ambient_rank, gens);
}

bool Cone::is_simplicial() const { return is_pointed() && static_cast<Index>(rays_.size()) == dimension(); }

bool Cone::contains(const LatticePoint& v) const {
  check_rank(ambient_rank_, v);
  for (const LatticePoint& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const LatticePoint& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  return std::all_of(other.rays_.begin(), other.rays_.end(), [this](const LatticePoint& r) { return contains(r); });
}

bool Cone::contains_in_relative_interior(const LatticePoint& v) const {
  check_rank(ambient_rank_, v);
  for (const LatticePoint& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const LatticePoint& f : facets_)
    if (dot(f, v) <= 0) return false;
  return true;
}

bool Cone::has_ray(const LatticePoint& v) const { return contains_point(rays_, v); }

Integer Cone::multiplicity() const {
  if (!is_simplicial()) throw PreconditionError("multiplicity requires a simplicial cone");
  if (rays_.empty()) return 1;
  Integer m = 1;
  for (const Integer& f : smith_normal_form(rows_matrix(rays_, ambient_rank_)).invariant_factors) m *= f;
  return m;
}

LatticePoint Cone::interior_point() const {
  LatticePoint p = zero_point(ambient_rank_);
  for (const LatticePoint& r : rays_) p += r;
  return p;
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.ambient_rank_ != b.ambient_rank_ || a.rays_.size() != b.rays_.size()) return false;
  for (std::size_t i = 0; i < a.rays_.size(); ++i)
    if (!equal(a.rays_[i], b.rays_[i])) return false;
  return true;
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return a.ambient_rank() < b.ambient_rank();
  return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(), LexLess{});
}

Cone dual_cone(const Cone& c) {
  std::vector<LatticePoint> gens = c.facet_normals();
  for (const LatticePoint& e : with_negatives(c.equations())) gens.push_back(e);
  return Cone::from_generators(c.ambient_rank(), gens);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw InvalidInput("cones live in different lattices");
  std::vector<LatticePoint> normals;
  for (const Cone* c : {&a, &b}) {
    for (const LatticePoint& f : c->facet_normals()) normals.push_back(f);
    for (const LatticePoint& e : with_negatives(c->equations())) normals.push_back(e);
  }
  return Cone::from_inequalities(a.ambient_rank(), normals);
}

bool is_smooth(const Cone& c) {
  if (!c.is_simplicial()) return false;
  if (c.rays().empty()) return true;
  const auto snf = smith_normal_form(rows_matrix(c.rays(), c.ambient_rank()));
  return std::all_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                     [](const Integer& f) { return f == 1; });
}

std::vector<Cone> faces(const Cone& c) {
  const std::vector<LatticePoint>& rays = c.rays();
  using RaySet = std::vector<char>;
  std::vector<RaySet> facet_sets;
  for (const LatticePoint& f : c.facet_normals()) {
    RaySet s(rays.size(), 0);
    for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(f, rays[i]) == 0;
    facet_sets.push_back(std::move(s));
  }
  std::set<RaySet> seen;
  std::deque<RaySet> queue;
  const RaySet all(rays.size(), 1);
  seen.insert(all);
  queue.push_back(all);
  while (!queue.empty()) {
    const RaySet current = queue.front();
    queue.pop_front();
    for (const RaySet& t : facet_sets) {
      RaySet next(rays.size());
      for (std::size_t i = 0; i < rays.size(); ++i) next[i] = current[i] && t[i];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Cone> out;
  for (const RaySet& s : seen) {
    std::vector<LatticePoint> gens;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (s[i]) gens.push_back(rays[i]);
    out.push_back(Cone::from_generators(c.ambient_rank(), gens));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return cone_less(a, b);
  });
  return out;
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (!c.contains(face)) return false;
  std::vector<LatticePoint> face_rays;
  for (const LatticePoint& r : c.rays()) {
    bool tight_everywhere = true;
    for (const LatticePoint& f : c.facet_normals()) {
      const bool tight_on_face = std::all_of(face.rays().begin(), face.rays().end(),
                                             [&](const LatticePoint& g) { return dot(f, g) == 0; });
      if (tight_on_face && dot(f, r) != 0) {
        tight_everywhere = false;
        break;
      }
    }
    if (tight_everywhere) face_rays.push_back(r);
  }
  return Cone::from_generators(c.ambient_rank(), face_rays) == face;
}

Cone minimal_face_containing(const Cone& c, const LatticePoint& v) {
  if (!c.contains(v)) throw InvalidInput("point " + to_string(v) + " is not in " + to_string(c));
  std::vector<LatticePoint> face_rays;
  for (const LatticePoint& r : c.rays()) {
    bool keep = true;
    for (const LatticePoint& f : c.facet_normals())
      if (dot(f, v) == 0 && dot(f, r) != 0) {
        keep = false;
        break;
      }
    if (keep) face_rays.push_back(r);
  }
  return Cone::from_generators(c.ambient_rank(), face_rays);
}

std::vector<Cone> triangulate(const Cone& c) {
  if (!c.is_pointed()) throw InvalidInput("triangulation requires a strongly convex cone");
  if (c.is_simplicial()) return {c};
  const LatticePoint& apex = c.rays().front();
  std::vector<Cone> out;
  for (const LatticePoint& f : c.facet_normals()) {
    if (dot(f, apex) == 0) continue;
    const Cone facet = Cone::from_generators(c.ambient_rank(), tight_rays(c, f));
    for (const Cone& simplex : triangulate(facet)) {
      std::vector<LatticePoint> gens = simplex.rays();
      gens.push_back(apex);
      out.push_back(Cone::from_generators(c.ambient_rank(), gens));
    }
  }
  std::sort(out.begin(), out.end(), cone_less);
  return out;
}

std::vector<LatticePoint> parallelepiped_points(const Cone& c) {
  if (!c.is_simplicial()) throw PreconditionError("parallelepiped points require a simplicial cone");
  const Index d = c.dimension();
  if (d == 0) return {zero_point(c.ambient_rank())};

  const IntMatrix basis = span_lattice_basis(c);
  IntMatrix gen(d, d);  // columns: rays in lattice coordinates
  for (Index j = 0; j < d; ++j) gen.col(j) = coordinates_in(basis, c.rays()[static_cast<std::size_t>(j)]);

  // Z^d / gen Z^d is represented by left^{-1} y with 0 ≤ y_i < invariant factor i.
  const auto snf = smith_normal_form(gen);
  const RatMatrix left_inv = inverse(snf.left);
  const RatMatrix gen_inv = inverse(gen);
  const RatMatrix gen_q = gen.cast<Rational>();

  std::vector<LatticePoint> out;
  std::vector<Integer> y(static_cast<std::size_t>(d), 0);
  for (;;) {
    RationalVector yq(d);
    for (Index i = 0; i < d; ++i) yq(i) = Rational(y[static_cast<std::size_t>(i)]);
    RationalVector lambda = gen_inv * (left_inv * yq);
    for (Index i = 0; i < d; ++i) lambda(i) = frac(lambda(i));
    const RationalVector p = gen_q * lambda;
    LatticePoint coords(d);
    for (Index i = 0; i < d; ++i) coords(i) = boost::multiprecision::numerator(p(i));
    out.push_back(basis * coords);

    Index k = 0;
    while (k < d) {
      auto& yk = y[static_cast<std::size_t>(k)];
      if (++yk < snf.invariant_factors[static_cast<std::size_t>(k)]) break;
      yk = 0;
      ++k;
    }
    if (k == d) break;
  }
  return sorted_unique(std::move(out));
}

std::vector<LatticePoint> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw InvalidInput("hilbert basis requires a strongly convex cone");
  if (c.dimension() == 0) return {};

  PointSet candidates(c.rays().begin(), c.rays().end());
  for (const Cone& simplex : triangulate(c))
    for (const LatticePoint& p : parallelepiped_points(simplex))
      if (!is_zero(p)) candidates.insert(p);

  // Every reducible candidate x has some candidate y ≠ x with x - y ∈ C.
  std::vector<LatticePoint> pool(candidates.begin(), candidates.end());
  std::vector<LatticePoint> out;
  for (const LatticePoint& x : pool) {
    const bool reducible = std::any_of(pool.begin(), pool.end(), [&](const LatticePoint& y) {
      return !equal(x, y) && c.contains(LatticePoint(x - y));
    });
    if (!reducible) out.push_back(x);
  }
  return out;
}

std::vector<LatticePoint> enumerate_box(const Cone& c, long bound) {
  if (bound < 1) throw InvalidInput("box bound must be at least 1");
  const Index n = c.ambient_rank();
  std::vector<long> lo(static_cast<std::size_t>(n), -bound), hi(static_cast<std::size_t>(n), bound);
  for (Index i = 0; i < n; ++i) {
    bool nonneg = true, nonpos = true;
    for (const LatticePoint& r : c.rays()) {
      if (r(i) < 0) nonneg = false;
      if (r(i) > 0) nonpos = false;
    }
    if (nonneg) lo[static_cast<std::size_t>(i)] = 0;
    if (nonpos) hi[static_cast<std::size_t>(i)] = 0;
  }
  std::vector<LatticePoint> out;
  if (n == 0) return out;
  std::vector<long> x = lo;
  LatticePoint v(n);
  for (;;) {
    bool nonzero = false;
    for (Index i = 0; i < n; ++i) {
      v(i) = x[static_cast<std::size_t>(i)];
      nonzero = nonzero || x[static_cast<std::size_t>(i)] != 0;
    }
    if (nonzero && c.contains(v)) out.push_back(v);
    Index k = n - 1;
    while (k >= 0) {
      auto& xk = x[static_cast<std::size_t>(k)];
      if (xk < hi[static_cast<std::size_t>(k)]) {
        ++xk;
        break;
      }
      xk = lo[static_cast<std::size_t>(k)];
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::string to_string(const Cone& c) {
  std::string s = "cone{";
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    if (i) s += ",";
    s += to_string(c.rays()[i]);
  }
  return s + "}";
}

}  // namespace toricpair
