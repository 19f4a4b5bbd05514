#pragma once

// Pseudo-random Q-Gorenstein pairs for property checks and the corpus
// driver: the orthant or a small singular cone, with a random monomial ideal
// satisfying the standing hypothesis.

#include "toricpair/pair.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace toricpair {

/// Small Q-Gorenstein cones of the given dimension (2 or 3); the orthant
/// comes first.
std::vector<Cone> cone_library(Index dim);

struct CorpusInstance {
  Cone sigma;
  /// As drawn, before minimalization.
  std::vector<LatticePoint> exponents;
};

/// Draws σ (the orthant half of the time) and 1 to 4 exponents from the box
/// of σ^∨ with coordinates bounded by max_exp, redrawing until make_ideal
/// accepts them.
CorpusInstance random_instance(std::mt19937_64& rng, Index dim, long max_exp);

/// Instance i of the corpus with the given seed; independent of the others.
CorpusInstance corpus_instance(std::uint64_t seed, std::size_t i, Index dim, long max_exp);

}  // namespace toricpair
