#include <gtest/gtest.h>

#include <map>
#include <random>

#include "lequiv/lattice.hpp"
#include "oracles.hpp"

namespace {

using namespace lequiv;
using namespace lequiv::lattice;

constexpr int kBound = 25;

oracle::Gram2 small(GramMatrix const& g) {
  oracle::Gram2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = static_cast<long long>(g.entries()(i, j));
  return out;
}

// Every element of the finite form, via its cyclic factors.
std::map<oracle::Fraction, int> q_values(FiniteQuadraticForm const& f) {
  std::map<oracle::Fraction, int> values;
  std::vector<Integer> x(f.factors.size(), 0);
  while (true) {
    Rational const v = f.q(x);
    ++values[oracle::reduce(static_cast<long long>(numerator(v)),
                            static_cast<long long>(denominator(v)))];
    std::size_t i = 0;
    while (i < x.size() && x[i] + 1 == f.factors[i]) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
  return values;
}

TEST(Gram, Validation) {
  EXPECT_THROW(GramMatrix(IntMatrix{{1, 0}, {0, 2}}), std::invalid_argument);  // odd
  EXPECT_THROW(GramMatrix(IntMatrix{{2, 1}, {0, 2}}), std::invalid_argument);  // asymmetric
  EXPECT_THROW(GramMatrix(IntMatrix{{2, 2}, {2, 2}}), std::invalid_argument);  // degenerate
  EXPECT_THROW(GramMatrix(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), std::invalid_argument);
  EXPECT_THROW(lambda_gram(0, 1), std::invalid_argument);
  EXPECT_EQ(lambda_gram(5, 3).entries(), (IntMatrix{{6, 5}, {5, 0}}));
}

TEST(Gram, SignatureOfHyperbolic) {
  for (int t = 1; t <= 7; ++t)
    for (int d = -3; d <= 7; ++d) {
      auto const s = signature(lambda_gram(t, d));
      EXPECT_EQ(s.positive, 1);
      EXPECT_EQ(s.negative, 1);
    }
  auto const s = signature(direct_sum(hyperbolic_plane(), lambda_gram(5, 0)));
  EXPECT_EQ(s.positive, 2);
  EXPECT_EQ(s.negative, 2);
}

TEST(Isotropic, LinesAreIsotropicAndPrimitive) {
  for (int t = 1; t <= 9; ++t)
    for (int d = -9; d <= 9; ++d) {
      auto const g = lambda_gram(t, d);
      EXPECT_EQ(isotropic_modulus(g), t);
      auto const lines = isotropic_lines(g);
      EXPECT_EQ(lines.size(), 2u);
      for (auto const& e : lines) {
        EXPECT_EQ(g.pairing(e, e), 0);
        EXPECT_EQ(gcd(e[0], e[1]), 1);
      }
    }
}

TEST(Isomorphism, AgreesWithBruteForceSearch) {
  for (int t : {1, 2, 3, 4, 5, 6, 7})
    for (int d1 = 0; d1 < t; ++d1)
      for (int d2 = 0; d2 < t; ++d2) {
        auto const g1 = lambda_gram(t, d1), g2 = lambda_gram(t, d2);
        bool const brute = !oracle::brute_isomorphisms(small(g1), small(g2), kBound).empty();
        EXPECT_EQ(is_isomorphic(g1, g2), brute) << "t=" << t << " d=" << d1 << "," << d2;
      }
}

TEST(Isomorphism, ResidueRule) {
  // Lambda_{t,d} ≅ Lambda_{t,d'} iff d' ≡ d or d·d' ≡ 1 ... for t = 5 the
  // classes are {0}, {1}, {2,3}, {4}.
  std::vector<int> cls(5);
  for (int a = 0; a < 5; ++a) {
    cls[a] = a;
    for (int b = 0; b < a; ++b)
      if (is_isomorphic(lambda_gram(5, a), lambda_gram(5, b))) {
        cls[a] = cls[b];
        break;
      }
  }
  EXPECT_EQ(cls, (std::vector<int>{0, 1, 2, 2, 4}));
}

TEST(Isomorphism, FoundMatrixPullsBack) {
  for (int t : {3, 5, 7})
    for (int d1 = 0; d1 < 2 * t; ++d1)
      for (int d2 = 0; d2 < 2 * t; ++d2) {
        auto const g1 = lambda_gram(t, d1), g2 = lambda_gram(t, d2);
        auto const m = find_isomorphism(g1, g2);
        EXPECT_EQ(m.has_value(), is_isomorphic(g1, g2));
        if (m) {
          EXPECT_EQ(m->transpose() * g2.entries() * *m, g1.entries());
          EXPECT_EQ(abs(m->determinant()), 1);
        }
      }
}

TEST(Isomorphism, InvariantUnderRandomBasisChange) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int const t = 1 + static_cast<int>(rng() % 7);
    int const d = static_cast<int>(rng() % 15) - 7;
    auto const g = lambda_gram(t, d);
    // Product of random elementary matrices.
    IntMatrix m = IntMatrix::identity(2);
    for (int step = 0; step < 4; ++step) {
      IntMatrix e = IntMatrix::identity(2);
      int const i = static_cast<int>(rng() % 2);
      e(i, 1 - i) = static_cast<long long>(rng() % 5) - 2;
      m = m * e;
    }
    GramMatrix const h(m.transpose() * g.entries() * m);
    EXPECT_TRUE(is_isomorphic(g, h));
    EXPECT_EQ(canonical_residues(g), canonical_residues(h));
  }
}

TEST(IsometryGroup, OrdersForT5) {
  std::vector<std::size_t> orders;
  for (int d = 0; d < 5; ++d) orders.push_back(isometry_group(lambda_gram(5, d)).size());
  EXPECT_EQ(orders, (std::vector<std::size_t>{4, 4, 2, 2, 4}));
}

TEST(IsometryGroup, MatchesBruteForceAndIsClosed) {
  for (int t : {1, 2, 3, 4, 5, 6, 7})
    for (int d = 0; d < t; ++d) {
      auto const g = lambda_gram(t, d);
      auto const group = isometry_group(g);
      EXPECT_EQ(group.size(), oracle::brute_isomorphisms(small(g), small(g), kBound).size())
          << "t=" << t << " d=" << d;
      for (auto const& a : group) {
        EXPECT_TRUE(is_isometry(a, g));
        for (auto const& b : group)
          EXPECT_NE(std::find(group.begin(), group.end(), a * b), group.end());
      }
      EXPECT_EQ(group.front(), IntMatrix::identity(2));
    }
}

TEST(Discriminant, FactorsForT5) {
  EXPECT_EQ(discriminant_form(lambda_gram(5, 0)).factors, (std::vector<Integer>{5, 5}));
  for (int d = 1; d < 5; ++d) {
    EXPECT_EQ(discriminant_form(lambda_gram(5, d)).factors, std::vector<Integer>{25});
  }
}

TEST(Discriminant, QValuesMatchDirectEnumeration) {
  for (int t : {1, 2, 3, 4, 5, 6, 7})
    for (int d = -3; d < 2 * t; ++d) {
      auto const g = lambda_gram(t, d);
      auto const f = discriminant_form(g);
      EXPECT_EQ(f.order(), Integer(t) * t);
      EXPECT_EQ(q_values(f), oracle::discriminant_q_values(small(g))) << "t=" << t << " d=" << d;
    }
}

TEST(Discriminant, GeneratorValue) {
  // Z/25 with a generator of q-value -2d/25 mod 2.
  for (int d = 1; d < 5; ++d) {
    auto const f = discriminant_form(lambda_gram(5, d));
    Rational const target = reduce_mod(Rational(-2 * d, 25), 2);
    bool found = false;
    for (int k = 1; k < 25; ++k) {
      if (k % 5 == 0) continue;
      found = found || f.q({Integer(k)}) == target;
    }
    EXPECT_TRUE(found) << "d=" << d;
  }
}

TEST(Discriminant, IsomorphismTracksLatticeIsomorphism) {
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      auto const fa = discriminant_form(lambda_gram(5, a));
      auto const fb = discriminant_form(lambda_gram(5, b));
      EXPECT_EQ(is_isomorphic(fa, fb), is_isomorphic(lambda_gram(5, a), lambda_gram(5, b)) ||
                                           same_genus(lambda_gram(5, a), lambda_gram(5, b)));
    }
}

TEST(Genus, OneAndFourShareAGenus) {
  EXPECT_TRUE(same_genus(lambda_gram(5, 1), lambda_gram(5, 4)));
  EXPECT_FALSE(is_isomorphic(lambda_gram(5, 1), lambda_gram(5, 4)));
  EXPECT_FALSE(same_genus(lambda_gram(5, 0), lambda_gram(5, 1)));
  EXPECT_TRUE(same_genus(lambda_gram(5, 2), lambda_gram(5, 3)));
  EXPECT_FALSE(same_genus(lambda_gram(5, 1), lambda_gram(5, 2)));
}

TEST(Genus, IsomorphicImpliesSameGenus) {
  for (int t : {3, 5, 7})
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        if (is_isomorphic(lambda_gram(t, a), lambda_gram(t, b))) {
          EXPECT_TRUE(same_genus(lambda_gram(t, a), lambda_gram(t, b)));
        }
}

TEST(Classification, ValidatedOnlyForOddPrimes) {
  EXPECT_TRUE(classification_validated(5));
  EXPECT_TRUE(classification_validated(7));
  EXPECT_FALSE(classification_validated(2));
  EXPECT_FALSE(classification_validated(9));
}

TEST(Json, GramAndFiniteForm) {
  EXPECT_EQ(to_json(lambda_gram(5, 1)).dump(), "[[2,5],[5,0]]");
  auto const f = discriminant_form(lambda_gram(5, 2));
  auto const back = finite_form_from_json(to_json(f));
  EXPECT_EQ(back.factors, f.factors);
  EXPECT_TRUE(is_isomorphic(back, f));
}

}  // namespace
