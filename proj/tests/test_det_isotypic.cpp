#include <gtest/gtest.h>

#include "altlab/det_isotypic.hpp"
#include "helpers.hpp"

using namespace altlab;
using testing_helpers::random_point;

using Q = Rational;
using P = Polynomial<Q>;

namespace {

P one_pair(const char* text) { return P::parse(text, 1); }

CommTuple<Q> tuple(std::initializer_list<const char*> entries) {
  CommTuple<Q> f;
  for (const char* e : entries) f.push_back(one_pair(e));
  return f;
}

}  // namespace

TEST(PullbackPsi, Examples) {
  EXPECT_EQ(pullback_psi(tuple({"1", "x1"})), P::parse("x2 - x1", 2));
  EXPECT_TRUE(pullback_psi(tuple({"1", "1"})).is_zero());
  EXPECT_EQ(pullback_psi(tuple({"3*x1^2*y1 - 1/2"})), P::parse("3*x1^2*y1 - 1/2", 1));
  EXPECT_EQ(pullback_psi(tuple({"1", "y1"})), P::parse("y2 - y1", 2));
  EXPECT_THROW(pullback_psi(CommTuple<Q>{P::parse("x1", 2)}), UsageError);
}

TEST(PullbackPsi, AgreesWithDeltaOnMonomialTuples) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& d : biexponent_sets(n, {3, 2}))
      EXPECT_EQ(pullback_psi(abelianize<Q>(lift_set(d))), delta<Q>(d)) << d.str();
}

TEST(WedgeIdentity, Examples) {
  EXPECT_TRUE(wedge_identity_check<Q>({NCWord(""), NCWord("x")}, 5, 1));
  EXPECT_TRUE(wedge_identity_check<Q>({NCWord("yxy")}, 5, 2));
  EXPECT_TRUE(wedge_identity_check<Q>({NCWord(""), NCWord("x"), NCWord("xy")}, 5, 3));
}

TEST(WedgeIdentity, RandomTuples) {
  Rng rng(51);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 30; ++t) EXPECT_TRUE(wedge_identity_check<Q>(random_nctuple(rng, n, 5), 3, rng.uniform(0, 1000)));
}

TEST(Surjectivity, Examples) {
  AkBasisCache<Q> cache;
  auto rep = surjectivity_check(1, {1, 1}, 2, cache);
  EXPECT_EQ(rep.span_dim, 2u);
  EXPECT_EQ(rep.target_dim, 2u);
  EXPECT_TRUE(rep.pass);
  rep = surjectivity_check(1, {0, 0}, 2, cache);
  EXPECT_EQ(rep.span_dim, 0u);
  EXPECT_TRUE(rep.pass);
  rep = surjectivity_check(2, {2, 0}, 2, cache);
  EXPECT_EQ(rep.span_dim, 1u);
  EXPECT_EQ(rep.target_dim, 1u);
  EXPECT_TRUE(rep.pass);
}

TEST(Surjectivity, WholeWindow) {
  AkBasisCache<Q> cache;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) EXPECT_TRUE(surjectivity_check(k, {a, b}, n, cache).pass) << n << k << a << b;
}

TEST(Injectivity, Examples) {
  AkBasisCache<Q> cache;
  for (int k = 1; k <= 3; ++k) {
    const auto rep = injectivity_evidence(k, {2, 1}, 1, 5, 7, cache);
    EXPECT_EQ(rep.eval_rank, 1u);
    EXPECT_EQ(rep.image_rank, 1u);
    EXPECT_EQ(rep.verdict, Verdict::Pass);
  }
  auto rep = injectivity_evidence(1, {1, 1}, 2, 20, 8, cache);
  EXPECT_EQ(rep.eval_rank, 2u);
  EXPECT_EQ(rep.image_rank, 2u);
  EXPECT_TRUE(rep.twist_consistent);
  EXPECT_EQ(rep.verdict, Verdict::Pass);

  rep = injectivity_evidence(2, {2, 2}, 2, 20, 9, cache, /*translate=*/false);
  EXPECT_EQ(rep.eval_rank, rep.image_rank);
  EXPECT_EQ(rep.verdict, Verdict::Pass);
}

TEST(Injectivity, TooFewPointsIsInconclusive) {
  AkBasisCache<Q> cache;
  const auto rep = injectivity_evidence(1, {3, 3}, 2, 2, 10, cache);
  EXPECT_GT(rep.image_rank, 2u);
  EXPECT_EQ(rep.verdict, Verdict::Inconclusive);
}

TEST(K0Remark, Examples) {
  auto rep = k0_remark_check<Q>({1, 0}, 2, 1);
  EXPECT_EQ(rep.target_dim, 1u);
  EXPECT_TRUE(rep.pass);
  rep = k0_remark_check<Q>({1, 1}, 2, 2);
  EXPECT_EQ(rep.span_dim, 2u);
  EXPECT_EQ(rep.target_dim, 2u);
  EXPECT_TRUE(rep.pass);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) EXPECT_TRUE(k0_remark_check<Q>({a, b}, 1, a + b).pass);
}

TEST(K0Remark, ShortWordsCannotReachTarget) {
  // Words of length 1 only give p_{1,0} and p_{0,1}; p_{1,1} is missing.
  const auto rep = k0_remark_check<Q>({1, 1}, 2, 1);
  EXPECT_EQ(rep.span_dim, 1u);
  EXPECT_FALSE(rep.pass);
}

TEST(DetIsotypicProperty, PullbackAlternatesAndSwapNegates) {
  Rng rng(52);
  for (int n = 2; n <= 3; ++n) {
    const auto perms = all_permutations(n);
    for (int t = 0; t < 10; ++t) {
      const auto f = abelianize<Q>(random_nctuple(rng, n, 4));
      const P p = pullback_psi(f);
      for (const auto& perm : perms) EXPECT_EQ(p.permuted(perm.images), Q(perm.sign) * p);
      auto g = f;
      std::swap(g[0], g[1]);
      EXPECT_EQ(pullback_psi(g), -p);
    }
  }
}

TEST(DetIsotypicProperty, PullbackIsMultiplicative) {
  Rng rng(53);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto f = random_nctuple(rng, n, 3), g = random_nctuple(rng, n, 3);
      const P product = pullback_psi(abelianize<Q>(f)) * pullback_psi(abelianize<Q>(g));
      const auto xs = random_point(rng, n), ys = random_point(rng, n);
      const auto pt = restriction_point(xs, ys);
      EXPECT_EQ(product.evaluate(xs, ys), psi_eval(pt, f) * psi_eval(pt, g));
    }
}

TEST(DetIsotypicProperty, PullbackBidegreeIsSumOfEntries) {
  Rng rng(54);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) {
      const auto f = random_nctuple(rng, n, 4);
      BiDegree total{0, 0};
      for (const auto& w : f) total = total + BiDegree{w.x_count(), w.y_count()};
      const P p = pullback_psi(abelianize<Q>(f));
      if (!p.is_zero()) EXPECT_TRUE(p.is_bihomogeneous(total));
    }
}
