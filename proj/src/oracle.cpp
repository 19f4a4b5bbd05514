#include "toricpair/oracle.hpp"

#include "toricpair/error.hpp"

#include <algorithm>

namespace toricpair {

namespace {

using Values = std::vector<long long>;

Values facet_values(const Cone& c, const LatticePoint& v) {
  Values out;
  for (const LatticePoint& u : c.facet_normals()) out.push_back(to_int64(dot(u, v)));
  return out;
}

bool nonneg(const Values& x) {
  return std::all_of(x.begin(), x.end(), [](long long t) { return t >= 0; });
}

bool difference_nonneg(const Values& big, const Values& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

}  // namespace

bool dominated(const LatticePoint& u, const LatticePoint& v, const ToricPair& pair, NashFlavor flavor) {
  const LatticePoint diff = v - u;
  if (flavor == NashFlavor::ZNash) return pair.sigma().contains(diff);
  for (const Cone& c : pair.dual().fan.maximal_cones())
    if (c.contains(u) && c.contains(v) && c.contains(diff)) return true;
  return false;
}

std::vector<LatticePoint> brute_force_minimal(const ToricPair& pair, NashFlavor flavor, long bound) {
  std::vector<LatticePoint> s;
  for (const LatticePoint& v : enumerate_box(pair.sigma(), bound))
    if (ord(v, pair.ideal()) >= 1) s.push_back(v);

  // Facet values turn every membership test into integer comparisons.
  const std::vector<Cone>& cones = flavor == NashFlavor::ZNash ? std::vector<Cone>{pair.sigma()}
                                                                : pair.dual().fan.maximal_cones();
  std::vector<std::vector<Values>> values(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const Cone& c : cones) values[i].push_back(facet_values(c, s[i]));

  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < s.size() && minimal; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < cones.size(); ++k) {
        const Values& vi = values[i][k];
        const Values& vj = values[j][k];
        if (nonneg(vi) && nonneg(vj) && difference_nonneg(vi, vj)) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) out.push_back(s[i]);
  }
  return out;
}

}  // namespace toricpair
