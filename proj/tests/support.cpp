#include "support.hpp"

#include "toricpair/linalg.hpp"

#include <functional>

namespace toricpair::testing {

bool in_cone_by_caratheodory(const std::vector<LatticePoint>& gens, const LatticePoint& v) {
  if (is_zero(v)) return true;
  const Index n = v.size();
  std::vector<LatticePoint> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    if (!chosen.empty()) {
      IntMatrix m(n, static_cast<Index>(chosen.size()));
      for (std::size_t j = 0; j < chosen.size(); ++j) m.col(static_cast<Index>(j)) = chosen[j];
      if (rank(m) == static_cast<Index>(chosen.size())) {
        if (const auto x = solve(m, v)) {
          bool nonneg = true;
          for (Index i = 0; i < x->size(); ++i) nonneg = nonneg && (*x)(i) >= 0;
          if (nonneg) return true;
        }
      } else {
        return false;
      }
    }
    if (static_cast<Index>(chosen.size()) == n) return false;
    for (std::size_t i = start; i < gens.size(); ++i) {
      chosen.push_back(gens[i]);
      if (search(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(0);
}

Cone random_cone(std::mt19937_64& rng, Index dim, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  std::uniform_int_distribution<long> lead(1, range);
  std::uniform_int_distribution<int> count(static_cast<int>(dim), static_cast<int>(dim) + 1);
  for (;;) {
    std::vector<LatticePoint> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      LatticePoint g(dim);
      g(0) = lead(rng);
      for (Index j = 1; j < dim; ++j) g(j) = coord(rng);
      gens.push_back(g);
    }
    Cone c = Cone::from_generators(dim, gens);
    if (c.is_full_dimensional() && c.is_pointed()) return c;
  }
}

std::vector<LatticePoint> box_irreducibles(const Cone& c, long bound) {
  const Index n = c.ambient_rank();
  std::vector<LatticePoint> points;
  std::vector<long> x(static_cast<std::size_t>(n), -bound);
  for (;;) {
    LatticePoint v(n);
    for (Index i = 0; i < n; ++i) v(i) = x[static_cast<std::size_t>(i)];
    if (!is_zero(v) && in_cone_by_caratheodory(c.rays(), v)) points.push_back(v);
    Index k = n - 1;
    while (k >= 0 && x[static_cast<std::size_t>(k)] == bound) x[static_cast<std::size_t>(k--)] = -bound;
    if (k < 0) break;
    ++x[static_cast<std::size_t>(k)];
  }
  std::vector<LatticePoint> out;
  for (const LatticePoint& p : points) {
    bool reducible = false;
    for (const LatticePoint& q : points) {
      if (equal(p, q)) continue;
      if (in_cone_by_caratheodory(c.rays(), LatticePoint(p - q))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(p);
  }
  return out;
}

}  // namespace toricpair::testing
