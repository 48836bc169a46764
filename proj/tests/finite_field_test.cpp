#include <gtest/gtest.h>

#include "lequiv/finite_field.hpp"
#include "oracles.hpp"

namespace {

using namespace lequiv::ffcount;

std::vector<std::pair<int, int>> all_fields() {
  std::vector<std::pair<int, int>> out;
  for (int p : {2, 3, 5, 7})
    for (int m = 1; m <= 4; ++m) out.emplace_back(p, m);
  return out;
}

TEST(FiniteField, RejectsBadParameters) {
  EXPECT_THROW(FiniteField(4, 1), std::invalid_argument);
  EXPECT_THROW(FiniteField(11, 1), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 0), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 5), std::invalid_argument);
}

TEST(FiniteField, IrreducibleCountsMatchNecklaceFormula) {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 4; ++m) {
      long long count = 0;
      long long total = 1;
      for (int i = 0; i < m; ++i) total *= p;
      for (long long code = 0; code < total; ++code) {
        std::vector<int> poly(m + 1, 0);
        long long c = code;
        for (int i = 0; i < m; ++i, c /= p) poly[i] = static_cast<int>(c % p);
        poly[m] = 1;
        if (is_irreducible(poly, p)) ++count;
      }
      EXPECT_EQ(count, oracle::irreducible_count(p, m)) << "p=" << p << " m=" << m;
    }
}

TEST(FiniteField, ChosenModulusIsIrreducible) {
  for (auto [p, m] : all_fields()) {
    FiniteField const f(p, m);
    EXPECT_TRUE(is_irreducible(f.modulus(), p));
    EXPECT_EQ(f.modulus(), first_irreducible(p, m));
  }
  EXPECT_EQ(FiniteField(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
}

TEST(FiniteField, TablesAgreeWithSlowArithmetic) {
  for (auto [p, m] : all_fields()) {
    FiniteField const f(p, m);
    int const step = f.order() > 256 ? 7 : 1;
    for (int a = 0; a < f.order(); a += step)
      for (int b = 0; b < f.order(); b += step) {
        ASSERT_EQ(f.add(a, b), f.add_slow(a, b)) << f.name();
        ASSERT_EQ(f.mul(a, b), f.mul_slow(a, b)) << f.name();
      }
  }
}

TEST(FiniteField, FieldAxiomsOnSmallFields) {
  for (auto [p, m] : all_fields()) {
    FiniteField const f(p, m);
    if (f.order() > 32) continue;
    int const q = f.order();
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      EXPECT_EQ(f.sub(a, a), 0);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1);
      }
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(FiniteField, MultiplicativeGroupIsCyclic) {
  for (auto [p, m] : all_fields()) {
    FiniteField const f(p, m);
    int best = 0;
    for (int a = 1; a < f.order() && best < f.order() - 1; ++a) {
      int order = 1;
      Elem x = static_cast<Elem>(a);
      while (x != 1) {
        x = f.mul(x, static_cast<Elem>(a));
        ++order;
      }
      best = std::max(best, order);
    }
    EXPECT_EQ(best, f.order() - 1) << f.name();
  }
}

TEST(FiniteField, FrobeniusIsAdditive) {
  FiniteField const f(3, 3);
  auto frob = [&f](Elem x) { return f.mul(x, f.mul(x, x)); };
  for (int a = 0; a < f.order(); ++a)
    for (int b = 0; b < f.order(); ++b)
      EXPECT_EQ(frob(f.add(a, b)), f.add(frob(a), frob(b)));
}

TEST(FiniteField, PrimeFieldConstantsEmbed) {
  FiniteField const f(5, 2), base(5, 1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      EXPECT_EQ(f.add(a, b), base.add(a, b));
      EXPECT_EQ(f.mul(a, b), base.mul(a, b));
    }
  EXPECT_EQ(f.from_integer(-1), 4);
  EXPECT_EQ(f.name(), "F_25");
}

TEST(Linear, RankAndNullspace) {
  FiniteField const f(3, 1);
  FieldMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 1;  // second row = 2·first
  EXPECT_EQ(rank(m, f), 1);
  auto const n = nullspace(m, f);
  EXPECT_EQ(n.rows, 2);
  for (int r = 0; r < n.rows; ++r) {
    Elem s = 0;
    for (int c = 0; c < 3; ++c) s = f.add(s, f.mul(m(0, c), n(r, c)));
    EXPECT_EQ(s, 0);
  }
}

}  // namespace
