#include "toricpair/corpus.hpp"

#include "toricpair/error.hpp"

namespace toricpair {

namespace {

Cone cone_of(Index dim, std::initializer_list<std::initializer_list<long long>> rays) {
  std::vector<LatticePoint> gens;
  for (auto r : rays) gens.push_back(lattice_point(r));
  return Cone::from_generators(dim, gens);
}

}  // namespace

std::vector<Cone> cone_library(Index dim) {
  if (dim == 2)
    return {Cone::orthant(2), cone_of(2, {{1, 0}, {1, 2}}), cone_of(2, {{1, 0}, {1, 3}}), cone_of(2, {{1, 0}, {2, 3}}),
            cone_of(2, {{1, 0}, {1, 4}})};
  if (dim == 3)
    return {Cone::orthant(3), cone_of(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}),
            cone_of(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}), cone_of(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 3}}),
            cone_of(3, {{1, 0, 0}, {1, 2, 0}, {0, 0, 1}})};
  throw InvalidInput("corpus dimension must be 2 or 3");
}

CorpusInstance random_instance(std::mt19937_64& rng, Index dim, long max_exp) {
  if (max_exp < 1) throw InvalidInput("max exponent must be at least 1");
  const std::vector<Cone> library = cone_library(dim);
  std::bernoulli_distribution use_orthant(0.5);
  std::uniform_int_distribution<std::size_t> pick_cone(1, library.size() - 1);
  const Cone& sigma = use_orthant(rng) ? library.front() : library[pick_cone(rng)];

  std::vector<LatticePoint> box = enumerate_box(dual_cone(sigma), max_exp);
  std::uniform_int_distribution<std::size_t> pick_point(0, box.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  for (;;) {
    std::vector<LatticePoint> exps;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) exps.push_back(box[pick_point(rng)]);
    try {
      make_ideal(exps, sigma);
      return {sigma, std::move(exps)};
    } catch (const InvalidInput&) {
    }
  }
}

CorpusInstance corpus_instance(std::uint64_t seed, std::size_t i, Index dim, long max_exp) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(dim)};
  std::mt19937_64 rng(seq);
  return random_instance(rng, dim, max_exp);
}

}  // namespace toricpair
