#pragma once

// Brute-force references that share nothing with the nash module beyond ord
// and the cones themselves: minimal elements by pairwise comparison over a
// box.

#include "toricpair/nash.hpp"

#include <vector>

namespace toricpair {

/// Minimal elements of S ∩ [-bound, bound]^n under the flavor's order, by
/// comparing every pair of box points. Exact on the orthant, where anything
/// below v in either order is also in v's box.
std::vector<LatticePoint> brute_force_minimal(const ToricPair& pair, NashFlavor flavor, long bound);

/// u ≼ v in the flavor's order.
bool dominated(const LatticePoint& u, const LatticePoint& v, const ToricPair& pair, NashFlavor flavor);

}  // namespace toricpair
