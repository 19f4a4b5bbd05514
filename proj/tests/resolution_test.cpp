#include "support.hpp"

#include "toricpair/corpus.hpp"
#include "toricpair/error.hpp"
#include "toricpair/resolution.hpp"

#include <gtest/gtest.h>

namespace toricpair {
namespace {

using testing::C;
using testing::in_cone_by_caratheodory;
using testing::P;
using testing::Ps;
using testing::same_points;

ToricPair pair_of(const Cone& sigma, const std::vector<LatticePoint>& exps) { return ToricPair::make(sigma, exps); }
ToricPair cyclic(long long d) { return pair_of(Cone::orthant(3), Ps({{d, 1, 0}, {0, d, 1}, {1, 0, d}})); }
ToricPair max_ideal_2d() { return pair_of(Cone::orthant(2), Ps({{1, 0}, {0, 1}})); }
ToricPair a1_pair() { return pair_of(C({{1, 0}, {1, 2}}), Ps({{0, 1}, {1, 0}, {2, -1}})); }

Fan subdivided(Fan f, std::initializer_list<std::initializer_list<long long>> centers) {
  for (auto c : centers) f = star_subdivide(f, lattice_point(c));
  return f;
}

long long det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    out += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return out;
}

// Every maximal cone is spanned by a lattice basis, and the cones cover the
// lattice points of σ in a box.
void expect_smooth_cover(const Fan& f, const Cone& sigma) {
  for (const Cone& c : f.maximal_cones()) {
    ASSERT_EQ(static_cast<Index>(c.rays().size()), sigma.ambient_rank()) << to_string(c);
    std::vector<std::vector<long long>> m;
    for (const LatticePoint& r : c.rays()) {
      std::vector<long long> row;
      for (Index i = 0; i < r.size(); ++i) row.push_back(to_int64(r(i)));
      m.push_back(row);
    }
    EXPECT_EQ(std::abs(det(m)), 1) << to_string(c);
  }
  for (const LatticePoint& v : enumerate_box(sigma, 3)) {
    const bool covered = std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                                     [&](const Cone& c) { return in_cone_by_caratheodory(c.rays(), v); });
    EXPECT_TRUE(covered) << to_string(v);
  }
  for (const LatticePoint& r : f.rays()) EXPECT_TRUE(in_cone_by_caratheodory(sigma.rays(), r)) << to_string(r);
}

TEST(IsLogResolution, Examples) {
  const ToricPair p = max_ideal_2d();
  const Fan orthant = Fan::face_fan(Cone::orthant(2));
  EXPECT_TRUE(is_log_resolution(subdivided(orthant, {{1, 1}}), p));
  EXPECT_FALSE(is_log_resolution(orthant, p));
  EXPECT_TRUE(is_log_resolution(subdivided(orthant, {{1, 2}, {1, 1}}), p));
}

TEST(IsLogResolution, RejectsModificationOffZ) {
  // Z = {x = 0} in A^3; blowing up the y-z axis changes X away from Z.
  const ToricPair p = pair_of(Cone::orthant(3), Ps({{1, 0, 0}}));
  const Fan f = subdivided(Fan::face_fan(Cone::orthant(3)), {{0, 1, 1}});
  EXPECT_TRUE(f.is_smooth());
  EXPECT_FALSE(is_log_resolution(f, p));
  EXPECT_FALSE(is_z_resolution(f, p));
  EXPECT_TRUE(is_log_resolution(Fan::face_fan(Cone::orthant(3)), p));
}

TEST(IsLogResolution, SupportMismatch) {
  const ToricPair p = max_ideal_2d();
  EXPECT_THROW(is_log_resolution(Fan::face_fan(C({{1, 0}, {1, 1}})), p), InvalidInput);
  EXPECT_THROW(is_z_resolution(Fan::face_fan(C({{1, 0}, {1, 1}})), p), InvalidInput);
}

TEST(IsZResolution, Examples) {
  const ToricPair p = cyclic(2);
  const Fan orthant = Fan::face_fan(Cone::orthant(3));
  EXPECT_FALSE(is_z_resolution(orthant, p));
  // Blowing up the origin alone leaves the coordinate axes, which lie in Z,
  // without a divisor over them: cone{e1,e2} has ord 1 inside but rays of ord 0.
  const Fan blown_up = subdivided(orthant, {{1, 1, 1}});
  EXPECT_TRUE(blown_up.is_smooth());
  EXPECT_FALSE(is_z_resolution(blown_up, p));
  const Fan axes = subdivided(blown_up, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_TRUE(axes.is_smooth());
  EXPECT_TRUE(is_z_resolution(axes, p));
  // Not a log-resolution: it misses rays of the dual fan.
  EXPECT_FALSE(is_log_resolution(axes, p));

  EXPECT_TRUE(is_z_resolution(Fan::face_fan(Cone::orthant(2)), pair_of(Cone::orthant(2), Ps({{1, 0}}))));
}

TEST(SampleLogResolution, Examples) {
  const ResolutionModel m = sample_log_resolution(max_ideal_2d(), 7);
  EXPECT_EQ(m.fan, subdivided(Fan::face_fan(Cone::orthant(2)), {{1, 1}}));
  EXPECT_TRUE(same_points(m.exceptional_rays, Ps({{1, 1}})));

  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const ResolutionModel a1 = sample_log_resolution(a1_pair(), seed, {true, 0, 100});
    EXPECT_TRUE(a1.fan.has_ray(P({1, 1})));
    expect_smooth_cover(a1.fan, a1_pair().sigma());
  }

  const ToricPair p = cyclic(2);
  for (std::uint64_t seed : {3u, 11u}) {
    const ResolutionModel e = sample_log_resolution(p, seed, kDiverseSampling);
    EXPECT_TRUE(is_log_resolution(e.fan, p));
    EXPECT_TRUE(e.fan.has_ray(P({1, 1, 1})));
    for (const LatticePoint& r : p.dual().fan.rays()) EXPECT_TRUE(e.fan.has_ray(r)) << to_string(r);
    expect_smooth_cover(e.fan, p.sigma());
  }
}

TEST(SampleLogResolution, DeterministicDefault) {
  const ToricPair p = cyclic(3);
  const Fan a = sample_log_resolution(p, 1).fan;
  EXPECT_EQ(a, sample_log_resolution(p, 2).fan);
  EXPECT_EQ(sample_log_resolution(p, 5, kDiverseSampling).fan, sample_log_resolution(p, 5, kDiverseSampling).fan);
}

TEST(SampleLogResolution, Budget) {
  // The dual fan of a principal ideal is σ itself, of multiplicity 3.
  const ToricPair p = pair_of(C({{1, 0}, {1, 3}}), Ps({{1, 0}}));
  EXPECT_EQ(sample_log_resolution(p, 0, {false, 0, 2}).fan.rays().size(), 4u);
  EXPECT_THROW(sample_log_resolution(p, 0, {false, 0, 1}), BudgetExceeded);
  try {
    sample_log_resolution(p, 0, {false, 0, 1});
  } catch (const BudgetExceeded& e) {
    EXPECT_STREQ(e.what(), "resolution budget exceeded");
  }
}

TEST(SampleZResolution, PassesPredicate) {
  for (long long d : {2, 3}) {
    const ToricPair p = cyclic(d);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const ResolutionModel m = sample_z_resolution(p, seed, kDiverseSampling);
      EXPECT_TRUE(is_z_resolution(m.fan, p));
      expect_smooth_cover(m.fan, p.sigma());
    }
  }
}

TEST(DiscrepancyCrosscheck, Examples) {
  const ToricPair p = cyclic(2);
  const ResolutionModel m = sample_log_resolution(p, 0);
  EXPECT_TRUE(discrepancy_crosscheck(m, P({1, 1, 1})));
  EXPECT_EQ(discrepancy_function(P({1, 1, 1}), p), 0);
  for (const LatticePoint& r : p.sigma().rays()) EXPECT_TRUE(discrepancy_crosscheck(m, r));

  const ResolutionModel a1 = sample_log_resolution(a1_pair(), 0);
  EXPECT_TRUE(discrepancy_crosscheck(a1, P({1, 1})));
  EXPECT_EQ(discrepancy_function(P({1, 1}), a1_pair()), 0);

  EXPECT_THROW(discrepancy_crosscheck(m, P({1, 2, 3})), InvalidInput);
}

TEST(EssentialOverapprox, Examples) {
  EXPECT_TRUE(same_points(essential_overapprox(max_ideal_2d(), 5, 0, NashFlavor::LogNash), Ps({{1, 1}})));
  EXPECT_TRUE(same_points(essential_overapprox(pair_of(Cone::orthant(2), Ps({{1, 0}})), 3, 0, NashFlavor::LogNash),
                          Ps({{1, 0}})));
  const ToricPair p = cyclic(2);
  const std::vector<LatticePoint> ess = essential_overapprox(p, 8, 0, NashFlavor::LogNash);
  for (const LatticePoint& v : log_nash(p).members) EXPECT_TRUE(contains_point(ess, v)) << to_string(v);
  EXPECT_THROW(essential_overapprox(p, 0, 0, NashFlavor::LogNash), InvalidInput);
}

class RandomResolution : public ::testing::TestWithParam<int> {};

TEST_P(RandomResolution, Properties) {
  const Index dim = GetParam() < 20 ? 2 : 3;
  const CorpusInstance inst = corpus_instance(17, static_cast<std::size_t>(GetParam()), dim, 4);
  const ToricPair p = pair_of(inst.sigma, inst.exponents);
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const ResolutionModel m = sample_log_resolution(p, seed, kDiverseSampling);
    EXPECT_TRUE(is_log_resolution(m.fan, p));
    EXPECT_TRUE(is_z_resolution(m.fan, p));
    expect_smooth_cover(m.fan, p.sigma());
    for (const LatticePoint& r : m.exceptional_rays) EXPECT_FALSE(p.sigma().has_ray(r));
    if (p.qg())
      for (const LatticePoint& r : m.fan.rays()) EXPECT_TRUE(discrepancy_crosscheck(m, r)) << to_string(r);
  }
  const std::vector<LatticePoint> ess = essential_overapprox(p, 3, 0, NashFlavor::LogNash);
  for (const LatticePoint& v : log_nash(p).members) EXPECT_TRUE(contains_point(ess, v)) << to_string(v);
  const std::vector<LatticePoint> z_ess = essential_overapprox(p, 3, 0, NashFlavor::ZNash);
  for (const LatticePoint& v : z_nash(p).members) EXPECT_TRUE(contains_point(z_ess, v)) << to_string(v);
}

INSTANTIATE_TEST_SUITE_P(Corpus, RandomResolution, ::testing::Range(0, 35));

}  // namespace
}  // namespace toricpair
