#pragma once

// Toric resolutions of a pair by star subdivision: predicates for
// Z-resolutions and log-resolutions, seeded samplers, the two-route check of
// the discrepancy formula on a smooth model, and intersections of
// exceptional ray sets over samples.

#include "toricpair/nash.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace toricpair {

struct ResolutionOptions {
  /// Seeded pulling order and Hilbert basis centers. Off: rays are pulled in
  /// lexicographic order and the center is the non-ray Hilbert basis element
  /// of least coordinate sum (ties lexicographic), whatever the seed.
  bool randomize = false;
  /// Star subdivisions at random points with ord ≥ 1 before smoothing.
  int extra_subdivisions = 0;
  /// Maximum number of star subdivisions per sample.
  std::size_t budget = 10000;
};

struct ResolutionModel {
  Fan fan;
  ToricPair base;
  /// Rays of the fan that are not rays of σ.
  std::vector<LatticePoint> exceptional_rays;
  /// Rays with ord ≥ 1, i.e. components of the preimage of Z.
  std::vector<LatticePoint> z_preimage_rays;
};

/// Smooth, refines the dual fan, and an isomorphism off Z. Throws
/// InvalidInput unless the support of f is σ.
bool is_log_resolution(const Fan& f, const ToricPair& pair);

/// Smooth, an isomorphism off Z, and every cone meeting the preimage of Z
/// has a ray with ord ≥ 1. Throws InvalidInput unless the support of f is σ.
bool is_z_resolution(const Fan& f, const ToricPair& pair);

/// Refinement of the dual fan by pulling and then star subdivision at
/// Hilbert basis points of the cone of largest multiplicity, until smooth.
/// Throws BudgetExceeded past options.budget subdivisions.
ResolutionModel sample_log_resolution(const ToricPair& pair, std::uint64_t seed, const ResolutionOptions& options = {});

/// Z-resolution grown from σ instead of the dual fan; it need not make the
/// ideal principal.
ResolutionModel sample_z_resolution(const ToricPair& pair, std::uint64_t seed, const ResolutionOptions& options = {});

/// a(D_v) computed directly and through the Cartier data of rK_X pulled back
/// to the model; true iff they agree. v must be a ray of the model.
bool discrepancy_crosscheck(const ResolutionModel& model, const LatticePoint& v);

/// Sampling options for intersections: randomized, one extra subdivision.
inline constexpr ResolutionOptions kDiverseSampling{true, 1, 10000};

/// Rays with ord ≥ 1 present in each of k seeded samples (log-resolutions
/// for LogNash, Z-resolutions for ZNash); sample i uses seed + i. Contains
/// every essential divisor.
std::vector<LatticePoint> essential_overapprox(const ToricPair& pair, int k, std::uint64_t seed, NashFlavor flavor,
                                               const ResolutionOptions& options = kDiverseSampling);

}  // namespace toricpair
