#pragma once

// Shared test helpers: small random cones and brute-force reference
// computations that do not go through the library's own algorithms.

#include "toricpair/cone.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace toricpair {

inline void PrintTo(const Cone& c, std::ostream* os) { *os << to_string(c); }

}  // namespace toricpair

namespace toricpair::testing {

inline LatticePoint P(std::initializer_list<long long> c) { return lattice_point(c); }

inline std::vector<LatticePoint> Ps(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<LatticePoint> out;
  for (auto r : rows) out.push_back(lattice_point(r));
  return out;
}

inline Cone C(std::initializer_list<std::initializer_list<long long>> rays) {
  const auto gens = Ps(rays);
  return Cone::from_generators(static_cast<Index>(gens.front().size()), gens);
}

inline bool same_points(std::vector<LatticePoint> a, std::vector<LatticePoint> b) {
  a = sorted_unique(std::move(a));
  b = sorted_unique(std::move(b));
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

// Membership by the defining generators only: v is a nonnegative rational
// combination of gens. Solved by checking every simplicial sub-cone
// (Carathéodory), independent of the facet description.
bool in_cone_by_caratheodory(const std::vector<LatticePoint>& gens, const LatticePoint& v);

// Full-dimensional strongly convex cone with 3-4 random generators in
// coordinates [-range, range], made pointed by keeping the first coordinate
// of every generator positive.
Cone random_cone(std::mt19937_64& rng, Index dim, long range);

// Every nonzero lattice point of the box that is not a sum of two nonzero
// lattice points of c in the box. Equals the Hilbert basis once the box
// contains it.
std::vector<LatticePoint> box_irreducibles(const Cone& c, long bound);

}  // namespace toricpair::testing
