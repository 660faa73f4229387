// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "cyclo/cyclotomic.hpp"

using namespace cyclo;

namespace {

// Phi_k by exact division of x^k - 1 by the lower-index factors.
IntPoly phi_by_division(u64 k) {
  IntPoly f = IntPoly::monomial(1, k) - IntPoly::constant(1);
  for (u64 d : divisors(k)) {
    if (d < k) f = *divide_exact(f, phi_poly(d));
  }
  return f;
}

}  // namespace

TEST(Cyclotomic, SmallIndexes) {
  EXPECT_EQ(phi_poly(1), (IntPoly{-1, 1}));
  EXPECT_EQ(phi_poly(2), (IntPoly{1, 1}));
  EXPECT_EQ(phi_poly(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(phi_poly(9), (IntPoly{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(phi_poly(12), (IntPoly{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2.
  EXPECT_EQ(height(phi_poly(105)), 2);
  EXPECT_EQ(phi_poly(105).coeff(7), -2);
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (u64 k = 1; k <= 3000; ++k) ASSERT_EQ(static_cast<u64>(phi_poly(k).degree()), euler_phi(k)) << k;
}

TEST(Cyclotomic, ProductOverDivisorsIsXkMinusOne) {
  for (u64 k = 1; k <= 300; ++k) {
    IntPoly p = IntPoly::constant(1);
    for (u64 d : divisors(k)) p *= phi_poly(d);
    ASSERT_EQ(p, IntPoly::monomial(1, k) - IntPoly::constant(1)) << k;
  }
}

TEST(Cyclotomic, AgreesWithDivisionOracle) {
  for (u64 k = 1; k <= 200; ++k) ASSERT_EQ(phi_poly(k), phi_by_division(k)) << k;
}

TEST(Cyclotomic, PalindromicWithUnitConstant) {
  for (u64 k = 2; k <= 3000; ++k) {
    const IntPoly f = phi_poly(k);
    ASSERT_EQ(f[0], 1) << k;
    if (k >= 3) ASSERT_TRUE(is_palindromic(f)) << k;
  }
}

TEST(Cyclotomic, SuffixIsTruncation) {
  for (u64 k = 2; k <= 1000; ++k) {
    if (moebius(k) == 0) continue;
    const IntPoly f = phi_poly(k);
    for (std::size_t m : {8u, 32u, 128u}) {
      const IntPoly s = phi_suffix(k, m);
      for (std::size_t j = 0; j < m; ++j) ASSERT_EQ(s.coeff(j), f.coeff(j)) << k << " " << m << " " << j;
      if (auto w = phi_suffix_word(k, m)) {
        for (std::size_t j = 0; j < m; ++j) ASSERT_EQ(Integer(static_cast<long>((*w)[j])), f.coeff(j));
      }
    }
  }
}

TEST(Cyclotomic, HeightWithinDegreeTable) {
  for (u64 k = 1; k <= 5000; ++k) {
    const IntPoly f = phi_poly(k);
    if (auto b = height_bound_by_degree(static_cast<u64>(f.degree()))) ASSERT_LE(height(f), *b) << k;
  }
}

TEST(Cyclotomic, DegreeTableRows) {
  EXPECT_EQ(height_bound_by_degree(47), 1u);
  EXPECT_EQ(height_bound_by_degree(48), 2u);
  EXPECT_EQ(height_bound_by_degree(5759), 9u);
  EXPECT_EQ(height_bound_by_degree(5760), 23u);
  EXPECT_FALSE(height_bound_by_degree(8640).has_value());
}

TEST(Cyclotomic, BfileParsing) {
  std::istringstream in("# heights\n0 1\n1 1\n2 1\n3 2\n4 1\n6 9\n");
  const HeightTable t = HeightTable::from_bfile(in);
  EXPECT_EQ(t.source(), HeightTable::Source::oeis_bfile);
  EXPECT_EQ(t.lookup(0), 1u);
  EXPECT_EQ(t.lookup(3), 2u);
  EXPECT_EQ(t.lookup(4), 2u);  // running maximum
  EXPECT_FALSE(t.lookup(5).has_value());  // gap at 5 ends the table
  std::istringstream bad("3 1\n2 1\n");
  EXPECT_THROW(HeightTable::from_bfile(bad), std::invalid_argument);
  std::istringstream junk("1 x\n");
  EXPECT_THROW(HeightTable::from_bfile(junk), std::invalid_argument);
}

TEST(Cyclotomic, ValueAtRational) {
  EXPECT_EQ(phi_value_num(3, {2, 1}), 7);
  EXPECT_EQ(phi_value_num(6, {2, 1}), 3);
  EXPECT_EQ(phi_value_num(1, {5, 3}), 2);
  for (u64 k = 1; k <= 100; ++k) {
    for (auto [p, q] : {std::pair{2L, 1L}, {3L, 2L}, {7L, 5L}}) {
      ASSERT_EQ(phi_value_num(k, {p, q}), eval_rational_num(phi_poly(k), {p, q})) << k;
    }
  }
}

TEST(Cyclotomic, MultiplyAndDivideByPhi) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    std::vector<Integer> c(static_cast<std::size_t>(rng() % 12 + 1));
    for (auto& a : c) a = static_cast<long>(rng() % 41) - 20;
    const IntPoly f(std::move(c));
    if (f.is_zero()) continue;
    for (u64 k : {1u, 2u, 6u, 12u, 30u, 105u}) {
      const IntPoly g = multiply_by_phi(f, k);
      ASSERT_EQ(g, f * phi_poly(k));
      ASSERT_EQ(*divide_by_phi(g, k), f);
    }
  }
  EXPECT_FALSE(divide_by_phi(phi_poly(5), 3).has_value());
}

TEST(Cyclotomic, OuterCoefficientBound) {
  EXPECT_EQ(outer_coeff_bound(10, 15, nullptr), 1u);
  // Every coefficient of Phi_n below x^m is bounded by the returned value.
  for (u64 n : {105u, 165u, 195u, 255u, 385u, 1155u, 3 * 5 * 7 * 11 * 13u}) {
    const IntPoly f = phi_poly(n);
    for (std::size_t m : {4u, 8u, 16u, 64u, 256u}) {
      auto b = outer_coeff_bound(m, n, nullptr);
      if (!b) continue;
      Integer h = 0;
      for (std::size_t j = 0; j < m && j < f.size(); ++j) h = std::max(h, Integer(abs(f[j])));
      ASSERT_LE(h, *b) << n << " " << m;
    }
  }
}
