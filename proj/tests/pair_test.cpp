#include "support.hpp"

#include "toricpair/corpus.hpp"
#include "toricpair/error.hpp"
#include "toricpair/pair.hpp"

#include <gtest/gtest.h>

namespace toricpair {
namespace {

using testing::C;
using testing::P;
using testing::Ps;

ToricPair pair_of(const Cone& sigma, const std::vector<LatticePoint>& exps) { return ToricPair::make(sigma, exps); }
ToricPair cyclic(long long d) { return pair_of(Cone::orthant(3), Ps({{d, 1, 0}, {0, d, 1}, {1, 0, d}})); }
ToricPair a1_maximal() { return pair_of(C({{1, 0}, {1, 2}}), Ps({{0, 1}, {1, 0}, {2, -1}})); }

Rational Q(long long p, long long q = 1) { return Rational(p) / Rational(q); }

long hilbert_bound(const ToricPair& p) {
  long b = 1;
  for (const auto& hb : p.cone_hilbert_bases())
    for (const auto& h : hb) b = std::max(b, static_cast<long>(to_int64(max_abs_coordinate(h))));
  return b;
}

TEST(QGorenstein, Examples) {
  const auto orth = qgorenstein(Cone::orthant(3));
  ASSERT_TRUE(orth);
  EXPECT_TRUE(equal(clear_denominators(orth->weight), P({1, 1, 1})));
  EXPECT_EQ(orth->index, 1);

  const auto a1 = qgorenstein(C({{1, 0}, {1, 2}}));
  ASSERT_TRUE(a1);
  EXPECT_EQ(a1->weight(0), 1);
  EXPECT_EQ(a1->weight(1), 0);
  EXPECT_EQ(a1->index, 1);

  EXPECT_FALSE(qgorenstein(C({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 2, 1}})));

  const auto third = qgorenstein(C({{1, 0}, {2, 3}}));
  ASSERT_TRUE(third);
  EXPECT_EQ(third->weight(1), Q(-1, 3));
  EXPECT_EQ(third->index, 3);
  // Gorenstein conifold: w = (1,1,0).
  const auto conifold = qgorenstein(C({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  ASSERT_TRUE(conifold);
  EXPECT_EQ(conifold->index, 1);
}

TEST(QGorenstein, WeightIsOneOnRaysAndIndexIsMinimal) {
  for (Index dim : {2, 3})
    for (const Cone& c : cone_library(dim)) {
      const auto qg = qgorenstein(c);
      ASSERT_TRUE(qg) << to_string(c);
      for (const auto& r : c.rays()) EXPECT_EQ(dot(r, qg->weight), 1);
      for (Integer k = 1; k <= qg->index; ++k) {
        bool integral = true;
        for (Index i = 0; i < qg->weight.size(); ++i) integral = integral && is_integral(Rational(k) * qg->weight(i));
        EXPECT_EQ(integral, k == qg->index);
      }
    }
}

TEST(LogDiscrepancy, Examples) {
  for (long long d = 1; d <= 4; ++d) EXPECT_EQ(log_discrepancy(P({0, 1, 1}), cyclic(d)), 1);
  EXPECT_EQ(log_discrepancy(P({1, 1, 1}), cyclic(3)), -1);
  EXPECT_EQ(log_discrepancy(P({1, 1}), a1_maximal()), 0);
}

TEST(LogDiscrepancy, Errors) {
  const ToricPair p = cyclic(2);
  EXPECT_THROW(log_discrepancy(P({0, 0, 0}), p), InvalidInput);
  EXPECT_THROW(log_discrepancy(P({0, 2, 2}), p), InvalidInput);
  EXPECT_THROW(log_discrepancy(P({-1, 1, 1}), p), InvalidInput);
  const ToricPair non_qg = pair_of(C({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 2, 1}}), Ps({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_FALSE(non_qg.qg());
  EXPECT_THROW(log_discrepancy(P({1, 1, 1}), non_qg), NotQGorenstein);
  EXPECT_THROW(mld(non_qg), NotQGorenstein);
  EXPECT_THROW(classify(non_qg), NotQGorenstein);
}

TEST(Mld, Examples) {
  const MldResult d2 = mld(cyclic(2));
  EXPECT_EQ(d2.kind, MldKind::Finite);
  EXPECT_EQ(d2.value, 0);
  EXPECT_TRUE(equal(d2.witness, P({1, 1, 1})));

  const MldResult d3 = mld(cyclic(3));
  EXPECT_EQ(d3.kind, MldKind::MinusInfinity);
  EXPECT_TRUE(equal(d3.witness, P({1, 1, 1})));
  EXPECT_EQ(d3.value, -1);

  const MldResult m = mld(pair_of(Cone::orthant(2), Ps({{1, 0}, {0, 1}})));
  EXPECT_EQ(m.kind, MldKind::Finite);
  EXPECT_EQ(m.value, 1);
  EXPECT_TRUE(equal(m.witness, P({0, 1})));

  const MldResult a1 = mld(a1_maximal());
  EXPECT_EQ(a1.value, 0);
  EXPECT_TRUE(equal(a1.witness, P({1, 1})));
}

TEST(Mld, RejectsDimensionOne) {
  const ToricPair line = pair_of(Cone::orthant(1), Ps({{2}}));
  EXPECT_THROW(mld(line), InvalidInput);
}

TEST(BruteForceMld, Examples) {
  const MldResult d2 = brute_force_mld(cyclic(2), 4);
  EXPECT_EQ(d2.kind, MldKind::Finite);
  EXPECT_EQ(d2.value, 0);
  const MldResult d3 = brute_force_mld(cyclic(3), 2);
  EXPECT_EQ(d3.kind, MldKind::MinusInfinity);
  EXPECT_TRUE(equal(d3.witness, P({1, 1, 1})));
  const MldResult principal = brute_force_mld(pair_of(Cone::orthant(2), Ps({{1, 0}})), 3);
  EXPECT_EQ(principal.value, 0);
  EXPECT_TRUE(equal(principal.witness, P({1, 0})));
  const MldResult m = brute_force_mld(pair_of(Cone::orthant(2), Ps({{1, 0}, {0, 1}})), 5);
  EXPECT_EQ(m.value, 1);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(cyclic(2)).cls, LcClass::LogCanonicalNotLt);
  const LcClassification d3 = classify(cyclic(3));
  EXPECT_EQ(d3.cls, LcClass::NotLogCanonical);
  EXPECT_TRUE(contains_point(d3.d_part, P({1, 1, 1})));
  for (const auto& v : d3.d_part) EXPECT_FALSE(contains_point(d3.dprime_part, v));

  const LcClassification lt = classify(pair_of(Cone::orthant(2), Ps({{1, 0}, {0, 1}})));
  EXPECT_EQ(lt.cls, LcClass::LogTerminal);
  ASSERT_EQ(lt.l_coefficients.size(), 3u);
  for (const auto& [ray, c] : lt.l_coefficients) EXPECT_EQ(c, 1) << to_string(ray);
}

TEST(Classify, IndexScalesCoefficients) {
  // w = (1, -1/3): coefficients are 3·a on the dual-fan rays.
  const ToricPair p = pair_of(C({{1, 0}, {2, 3}}), Ps({{0, 1}, {3, -2}}));
  for (const auto& [ray, c] : classify(p).l_coefficients) EXPECT_EQ(Rational(c), 3 * log_discrepancy(ray, p));
}

class RandomPairs : public ::testing::TestWithParam<int> {};

TEST_P(RandomPairs, MldAgreesWithBruteForceAndClassification) {
  const Index dim = GetParam() < 40 ? 2 : 3;
  const CorpusInstance inst = corpus_instance(77, static_cast<std::size_t>(GetParam()), dim, 4);
  const ToricPair p = pair_of(inst.sigma, inst.exponents);
  const MldResult exact = mld(p);
  const long bound = hilbert_bound(p);
  const MldResult box = brute_force_mld(p, bound);
  EXPECT_EQ(exact.kind, box.kind);
  if (exact.finite()) {
    EXPECT_EQ(exact.value, box.value);
    EXPECT_EQ(log_discrepancy(exact.witness, p), exact.value);
    EXPECT_LE(exact.value, 1);
    // The bound is attained at a ray of σ.
    Rational ray_min = 1;
    for (const auto& r : p.sigma().rays()) ray_min = std::min(ray_min, log_discrepancy(r, p));
    EXPECT_LE(exact.value, ray_min);
  } else {
    EXPECT_LT(log_discrepancy(exact.witness, p), 0);
  }
  const LcClass cls = classify(p).cls;
  if (!exact.finite()) EXPECT_EQ(cls, LcClass::NotLogCanonical);
  else if (exact.value == 0) EXPECT_EQ(cls, LcClass::LogCanonicalNotLt);
  else EXPECT_EQ(cls, LcClass::LogTerminal);

  const Integer r = p.require_qg().index;
  for (const auto& v : enumerate_box(p.sigma(), 3)) {
    EXPECT_TRUE(is_integral(Rational(r) * discrepancy_function(v, p)));
    for (int k = 2; k <= 3; ++k)
      EXPECT_EQ(discrepancy_function(LatticePoint(v * Integer(k)), p), k * discrepancy_function(v, p));
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, RandomPairs, ::testing::Range(0, 60));

}  // namespace
}  // namespace toricpair
