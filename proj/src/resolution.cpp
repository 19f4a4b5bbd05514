#include "toricpair/resolution.hpp"

#include "toricpair/error.hpp"
#include "toricpair/linalg.hpp"

#include <algorithm>
#include <random>

namespace toricpair {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x7265u};
  return std::mt19937_64(seq);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

void require_support(const Fan& f, const ToricPair& pair) {
  if (f.ambient_rank() != pair.rank() || !same_support(f, Fan::face_fan(pair.sigma())))
    throw InvalidInput("fan support differs from the cone");
}

// Cones on which ord vanishes must be faces of σ: anything else would
// modify X away from Z.
bool isomorphism_off_z(const Fan& f, const ToricPair& pair) {
  for (const Cone& c : f.cones())
    if (ord_vanishes_on(c, pair.ideal()) && !is_face_of(c, pair.sigma())) return false;
  return true;
}

class Sampler {
 public:
  Sampler(const ToricPair& pair, std::uint64_t seed, const ResolutionOptions& options)
      : pair_(pair), options_(options), rng_(make_rng(seed)) {}

  Fan pulled(const Fan& f) {
    std::vector<LatticePoint> order = f.rays();
    if (options_.randomize) std::shuffle(order.begin(), order.end(), rng_);
    return pulling_triangulation(f, order);
  }

  Fan subdivide(const Fan& f, const LatticePoint& v) {
    if (++steps_ > options_.budget) throw BudgetExceeded();
    return star_subdivide(f, v);
  }

  // New rays are primitive sums of Hilbert basis elements with ord ≥ 1.
  Fan extra(Fan f) {
    for (int i = 0; i < options_.extra_subdivisions; ++i) {
      const std::vector<LatticePoint> hb = hilbert_basis(pick(rng_, f.maximal_cones()));
      const LatticePoint v = primitivize(pick(rng_, hb) + pick(rng_, hb));
      if (ord(v, pair_.ideal()) >= 1) f = subdivide(f, v);
    }
    return f;
  }

  // Star subdivision at Hilbert basis points of the cone of largest
  // multiplicity. A non-ray Hilbert basis point lies in the half-open
  // parallelepiped, so every new cone has smaller multiplicity.
  Fan smoothed(Fan f) {
    for (;;) {
      const Cone* worst = nullptr;
      Integer worst_mult = 1;
      for (const Cone& c : f.maximal_cones()) {
        const Integer m = c.multiplicity();
        if (m > worst_mult) {
          worst = &c;
          worst_mult = m;
        }
      }
      if (!worst) return f;
      std::vector<LatticePoint> centers;
      for (const LatticePoint& h : hilbert_basis(*worst))
        if (!worst->has_ray(h)) centers.push_back(h);
      LatticePoint center;
      if (options_.randomize) {
        center = pick(rng_, centers);
      } else {
        center = *std::min_element(centers.begin(), centers.end(), [](const auto& a, const auto& b) {
          const Integer na = l1_norm(a), nb = l1_norm(b);
          return na != nb ? na < nb : lex_less(a, b);
        });
      }
      f = subdivide(f, center);
    }
  }

  // Cones meeting the preimage of Z but with no ray of ord ≥ 1 get a ray at
  // their barycenter, where ord is a positive integer.
  Fan pure_codim_one(Fan f) {
    for (;;) {
      std::optional<Cone> bad;
      for (const Cone& c : f.cones()) {
        if (ord_vanishes_on(c, pair_.ideal())) continue;
        const bool met = std::any_of(c.rays().begin(), c.rays().end(),
                                     [&](const LatticePoint& r) { return ord(r, pair_.ideal()) >= 1; });
        if (!met) {
          bad = c;
          break;
        }
      }
      if (!bad) return f;
      f = subdivide(f, primitivize(bad->interior_point()));
    }
  }

 private:
  const ToricPair& pair_;
  ResolutionOptions options_;
  std::mt19937_64 rng_;
  std::size_t steps_ = 0;
};

ResolutionModel model_of(Fan f, const ToricPair& pair) {
  ResolutionModel m{std::move(f), pair, {}, {}};
  for (const LatticePoint& r : m.fan.rays()) {
    if (!pair.sigma().has_ray(r)) m.exceptional_rays.push_back(r);
    if (ord(r, pair.ideal()) >= 1) m.z_preimage_rays.push_back(r);
  }
  return m;
}

}  // namespace

bool is_log_resolution(const Fan& f, const ToricPair& pair) {
  require_support(f, pair);
  return f.is_smooth() && refines(f, pair.dual().fan) && isomorphism_off_z(f, pair);
}

bool is_z_resolution(const Fan& f, const ToricPair& pair) {
  require_support(f, pair);
  if (!f.is_smooth() || !isomorphism_off_z(f, pair)) return false;
  for (const Cone& c : f.cones()) {
    if (ord_vanishes_on(c, pair.ideal())) continue;
    if (std::none_of(c.rays().begin(), c.rays().end(),
                     [&](const LatticePoint& r) { return ord(r, pair.ideal()) >= 1; }))
      return false;
  }
  return true;
}

ResolutionModel sample_log_resolution(const ToricPair& pair, std::uint64_t seed, const ResolutionOptions& options) {
  Sampler s(pair, seed, options);
  Fan f = s.pulled(pair.dual().fan);
  f = s.extra(std::move(f));
  return model_of(s.smoothed(std::move(f)), pair);
}

ResolutionModel sample_z_resolution(const ToricPair& pair, std::uint64_t seed, const ResolutionOptions& options) {
  Sampler s(pair, seed, options);
  Fan f = s.pulled(Fan::face_fan(pair.sigma()));
  f = s.extra(std::move(f));
  f = s.pure_codim_one(std::move(f));
  return model_of(s.smoothed(std::move(f)), pair);
}

bool discrepancy_crosscheck(const ResolutionModel& model, const LatticePoint& v) {
  if (!model.fan.has_ray(v)) throw InvalidInput("point is not a ray of the resolution: " + to_string(v));
  const ToricPair& pair = model.base;
  const QGorensteinData& qg = pair.require_qg();
  const Rational direct = discrepancy_function(v, pair);

  // Cartier data m of rK_X: ⟨ρ, m⟩ = −r on every ray of σ.
  const std::vector<LatticePoint>& rays = pair.sigma().rays();
  const IntMatrix a = rows_matrix(rays, pair.rank());
  const IntMatrix b = IntMatrix::Constant(a.rows(), 1, -qg.index);
  const std::optional<RationalVector> m = solve(a, b);
  if (!m) return false;
  const Rational pullback_rk = dot(v, *m);

  // ord of f^{-1}Z along D_v: read off the vertex of the dual-fan cone that
  // holds v's cone in the model, when the model refines the dual fan.
  Integer ord_z;
  const Cone home = smallest_containing_cone(model.fan, v);
  const auto& maximal = pair.dual().fan.maximal_cones();
  if (std::any_of(maximal.begin(), maximal.end(), [&](const Cone& c) { return c.contains(home); }))
    ord_z = dot(v, pair.dual().vertex_for(home));
  else
    ord_z = ord(v, pair.ideal());

  const Rational r(qg.index);
  const Rational via_cartier = (-pullback_rk - r * Rational(ord_z)) / r;
  return via_cartier == direct;
}

std::vector<LatticePoint> essential_overapprox(const ToricPair& pair, int k, std::uint64_t seed, NashFlavor flavor,
                                               const ResolutionOptions& options) {
  if (k < 1) throw InvalidInput("sample count must be at least 1");
  std::vector<LatticePoint> common;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const ResolutionModel m = flavor == NashFlavor::LogNash ? sample_log_resolution(pair, s, options)
                                                            : sample_z_resolution(pair, s, options);
    std::vector<LatticePoint> rays = sorted_unique(m.z_preimage_rays);
    if (i == 0) {
      common = std::move(rays);
      continue;
    }
    std::vector<LatticePoint> kept;
    for (const LatticePoint& v : common)
      if (contains_point(rays, v)) kept.push_back(v);
    common = std::move(kept);
  }
  return common;
}

}  // namespace toricpair
