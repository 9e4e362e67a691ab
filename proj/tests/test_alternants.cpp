#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "altlab/alternants.hpp"
#include "altlab/random.hpp"

using namespace altlab;

using P = Polynomial<Rational>;

namespace {

P parse(const char* text, int n) { return P::parse(text, n); }

Monomial mono(std::vector<int> xe, std::vector<int> ye) { return Monomial(xe, ye); }

bool alternates(const P& p, const std::vector<Permutation>& perms) {
  for (const auto& perm : perms)
    if (p.permuted(perm.images) != Rational(perm.sign) * p) return false;
  return true;
}

// Number of n-element sets of distinct pairs (p,q) with column sums (a,b),
// counted by a plain subset walk over the (a+1)(b+1) box.
std::size_t count_biexponent_sets(int n, int a, int b) {
  std::vector<std::pair<int, int>> cells;
  for (int p = 0; p <= a; ++p)
    for (int q = 0; q <= b; ++q) cells.emplace_back(p, q);
  std::size_t count = 0;
  std::function<void(std::size_t, int, int, int)> walk = [&](std::size_t from, int left, int sp, int sq) {
    if (sp > a || sq > b) return;
    if (left == 0) {
      count += sp == a && sq == b;
      return;
    }
    for (std::size_t t = from; t < cells.size(); ++t) walk(t + 1, left - 1, sp + cells[t].first, sq + cells[t].second);
  };
  walk(0, n, 0, 0);
  return count;
}

using Table = std::vector<std::vector<std::size_t>>;

void expect_table(const std::map<BiDegree, std::size_t>& got, const Table& want) {
  for (std::size_t a = 0; a < want.size(); ++a)
    for (std::size_t b = 0; b < want[a].size(); ++b)
      EXPECT_EQ(got.at({static_cast<int>(a), static_cast<int>(b)}), want[a][b]) << "at (" << a << "," << b << ")";
}

}  // namespace

TEST(Antisymmetrize, Examples) {
  EXPECT_EQ(antisymmetrize<Rational>(mono({1, 0}, {0, 0})), parse("x1 - x2", 2));
  EXPECT_TRUE(antisymmetrize<Rational>(mono({1, 1}, {0, 0})).is_zero());
  EXPECT_EQ(antisymmetrize<Rational>(mono({1, 0}, {0, 1})), parse("x1*y2 - x2*y1", 2));
}

TEST(BiExponentSet, SortsAndValidates) {
  BiExponentSet d({{1, 0}, {0, 1}, {0, 0}});
  EXPECT_EQ(d.str(), "{(0,0),(0,1),(1,0)}");
  EXPECT_EQ(d.bidegree(), (BiDegree{1, 1}));
  EXPECT_THROW(BiExponentSet({{1, 0}, {1, 0}}), UsageError);
  EXPECT_THROW(BiExponentSet({{-1, 0}}), UsageError);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta<Rational>(BiExponentSet({{0, 0}})), P::constant(1, Rational(1)));
  EXPECT_EQ(delta<Rational>(BiExponentSet({{0, 0}, {1, 0}})), parse("x2 - x1", 2));
  // Sorted columns (0,1),(1,0): det [[y1,x1],[y2,x2]].
  const P d = delta<Rational>(BiExponentSet({{1, 0}, {0, 1}}));
  EXPECT_EQ(d, parse("x2*y1 - x1*y2", 2));
  EXPECT_EQ(-d, parse("x1*y2 - x2*y1", 2));
}

TEST(ElementarySymmetric, Examples) {
  EXPECT_EQ(elementary_symmetric_y<Rational>(2, 1), parse("y1 + y2", 2));
  EXPECT_EQ(elementary_symmetric_y<Rational>(2, 2), parse("y1*y2", 2));
  EXPECT_EQ(elementary_symmetric_y<Rational>(3, 2), parse("y1*y2 + y1*y3 + y2*y3", 3));
  EXPECT_THROW(elementary_symmetric_y<Rational>(2, 3), UsageError);
  EXPECT_THROW(elementary_symmetric_y<Rational>(2, 0), UsageError);
}

TEST(AkBasis, Examples) {
  const auto b11 = a_k_basis<Rational>(1, {1, 1}, 2);
  EXPECT_EQ(b11.dim(), 2u);
  EXPECT_TRUE(b11.contains(parse("x1*y1 - x2*y2", 2)));
  EXPECT_TRUE(b11.contains(parse("x1*y2 - x2*y1", 2)));
  EXPECT_FALSE(b11.contains(parse("x1*y1 + x2*y2", 2)));

  const auto b20 = a_k_basis<Rational>(2, {2, 0}, 2);
  EXPECT_EQ(b20.dim(), 1u);
  EXPECT_TRUE(b20.contains(parse("x1^2 - 2*x1*x2 + x2^2", 2)));

  EXPECT_EQ(a_k_basis<Rational>(1, {0, 0}, 2).dim(), 0u);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(a_k_basis<Rational>(k, {2, 3}, 1).dim(), 1u);
}

TEST(AkBasis, RowsAreBihomogeneousAndIndependent) {
  const auto b = a_k_basis<Rational>(2, {3, 2}, 2);
  const auto vs = b.vectors();
  ASSERT_EQ(vs.size(), b.dim());
  Matrix<Rational> m(static_cast<Eigen::Index>(vs.size()), b.monomials().size());
  for (std::size_t r = 0; r < vs.size(); ++r) {
    EXPECT_TRUE(vs[r].is_bihomogeneous({3, 2}));
    m.row(static_cast<Eigen::Index>(r)) = b.monomials().encode(vs[r]).transpose();
  }
  EXPECT_EQ(static_cast<std::size_t>(bareiss_rank(m)), vs.size());
  EXPECT_EQ(b.provenance().size(), vs.size());
}

TEST(HilbertTable, Examples) {
  const auto t = hilbert_table<Rational>(1, 2, {2, 2});
  EXPECT_EQ(t.size(), 9u);
  EXPECT_EQ(t.at({2, 0}), 1u);
  EXPECT_EQ(t.at({1, 1}), 2u);
  EXPECT_EQ(t.at({0, 0}), 0u);
  for (const auto& [bd, dim] : hilbert_table<Rational>(3, 1, {3, 3})) EXPECT_EQ(dim, 1u) << bd.str();
}

TEST(AlternantsProperty, AlternationUnderEveryPermutation) {
  Rng rng(31);
  for (int n = 2; n <= 3; ++n) {
    const auto perms = all_permutations(n);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<int> xe(n), ye(n);
      for (int i = 0; i < n; ++i) {
        xe[i] = static_cast<int>(rng.uniform(0, 3));
        ye[i] = static_cast<int>(rng.uniform(0, 3));
      }
      EXPECT_TRUE(alternates(antisymmetrize<Rational>(Monomial(xe, ye)), perms));
    }
    for (const auto& d : biexponent_sets(n, {3, 2})) EXPECT_TRUE(alternates(delta<Rational>(d), perms)) << d.str();
  }
}

TEST(AlternantsProperty, AlternationSampledForFourPairs) {
  Rng rng(32);
  const auto all = all_permutations(4);
  std::vector<Permutation> sample;
  for (int t = 0; t < 8; ++t) sample.push_back(all[static_cast<std::size_t>(rng.uniform(0, 23))]);
  for (const auto& d : biexponent_sets(4, {2, 3})) EXPECT_TRUE(alternates(delta<Rational>(d), sample));
}

TEST(AlternantsProperty, DeltaSpanEqualsAntisymmetrizedSpan) {
  for (int n = 2; n <= 3; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        GradedBasis<Rational> alt(n, {a, b});
        for (const auto& m : alt.monomials().monomials()) alt.offer(antisymmetrize<Rational>(m), "alt");
        const auto dl = a_k_basis<Rational>(1, {a, b}, n);
        ASSERT_EQ(dl.dim(), alt.dim());
        for (const auto& v : dl.vectors()) EXPECT_TRUE(alt.contains(v));
        EXPECT_TRUE(dl.echelon().to_matrix() == alt.echelon().to_matrix());
      }
}

TEST(AlternantsProperty, DimensionMatchesBiexponentCount) {
  for (int n = 1; n <= 3; ++n) {
    const int c = n == 3 ? 4 : 5;
    const auto t = hilbert_table<Rational>(1, n, {c, c});
    for (const auto& [bd, dim] : t) EXPECT_EQ(dim, count_biexponent_sets(n, bd.dx, bd.dy)) << n << " " << bd.str();
  }
}

TEST(AlternantsProperty, RecursiveBasisSpansDirectProducts) {
  for (int k = 2; k <= 3; ++k)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const auto basis = a_k_basis<Rational>(k, {a, b}, 2);
        GradedBasis<Rational> direct(2, {a, b});
        for_each_delta_product(2, k, {a, b}, [&](const std::vector<const BiExponentSet*>& sets) {
          P prod = P::constant(2, Rational(1));
          for (const auto* s : sets) prod = prod * delta<Rational>(*s);
          EXPECT_TRUE(basis.contains(prod));
          direct.offer(prod, "direct");
        });
        EXPECT_EQ(direct.dim(), basis.dim()) << k << " " << BiDegree{a, b}.str();
      }
}

TEST(AlternantsProperty, ProductsLandInHigherPower) {
  Rng rng(33);
  AkBasisCache<Rational> cache;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 3));
    const int j = static_cast<int>(rng.uniform(1, 2)), k = static_cast<int>(rng.uniform(1, 2));
    const BiDegree d1{static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(1, 2))};
    const BiDegree d2{static_cast<int>(rng.uniform(1, 2)), static_cast<int>(rng.uniform(0, 2))};
    const auto b1 = cache.get(j, d1, n), b2 = cache.get(k, d2, n);
    if (b1->dim() == 0 || b2->dim() == 0) continue;
    const auto v1 = b1->vectors(), v2 = b2->vectors();
    const P prod = v1[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(v1.size()) - 1))] *
                   v2[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(v2.size()) - 1))];
    const auto target = cache.get(j + k, d1 + d2, n);
    GradedBasis<Rational> grown = *target;
    EXPECT_FALSE(grown.offer(prod, "product"));
    EXPECT_EQ(grown.dim(), target->dim());
  }
}

TEST(AlternantsProperty, StableUnderElementarySymmetric) {
  AkBasisCache<Rational> cache;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int d = 1; d <= n; ++d) {
        const P e = elementary_symmetric_y<Rational>(n, d);
        for (int a = 0; a <= 3; ++a)
          for (int b = 0; b + d <= 3; ++b)
            for (const auto& v : cache.get(k, {a, b}, n)->vectors())
              EXPECT_TRUE(cache.get(k, {a, b + d}, n)->contains(e * v));
      }
}

// Frozen from an independent sympy computation spanning products of k
// antisymmetrized monomials (not Δ-determinants) and taking exact ranks.
TEST(HilbertTable, FrozenOracleTwoPairsSquare) {
  expect_table(hilbert_table<Rational>(2, 2, {5, 5}), {{0, 0, 1, 1, 2, 2},
                                                       {0, 1, 2, 3, 4, 5},
                                                       {1, 2, 4, 5, 7, 8},
                                                       {1, 3, 5, 7, 9, 11},
                                                       {2, 4, 7, 9, 12, 14},
                                                       {2, 5, 8, 11, 14, 17}});
}

TEST(HilbertTable, FrozenOracleTwoPairsCube) {
  expect_table(hilbert_table<Rational>(3, 2, {4, 4}),
               {{0, 0, 0, 1, 1}, {0, 0, 1, 2, 3}, {0, 1, 2, 4, 5}, {1, 2, 4, 6, 8}, {1, 3, 5, 8, 10}});
}

TEST(HilbertTable, FrozenOracleThreePairsSquare) {
  expect_table(hilbert_table<Rational>(2, 3, {3, 3}), {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 2}, {0, 0, 2, 5}});
}

TEST(HilbertTable, PrimeFieldAgreesHere) {
  EXPECT_EQ(hilbert_table<Fp31>(2, 2, {4, 4}), hilbert_table<Rational>(2, 2, {4, 4}));
  EXPECT_EQ(hilbert_table<Fp31>(1, 3, {3, 3}), hilbert_table<Rational>(1, 3, {3, 3}));
}

TEST(HilbertTable, IndependentOfWorkerCount) {
  Parallelism eight{8};
  EXPECT_EQ(hilbert_table<Rational>(2, 3, {3, 3}, eight), hilbert_table<Rational>(2, 3, {3, 3}));
}

TEST(AkBasisCache, ConcurrentGetsReturnOneEntry) {
  AkBasisCache<Rational> cache;
  std::vector<std::shared_ptr<const GradedBasis<Rational>>> got(16);
  parallel_for(got.size(), Parallelism{8}, [&](std::size_t t) { got[t] = cache.get(2, {2, 2}, 2); });
  for (const auto& g : got) {
    EXPECT_EQ(g.get(), got.front().get());
    EXPECT_EQ(g->dim(), 4u);
  }
}
