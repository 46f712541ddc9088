#include <gtest/gtest.h>

#include <random>

#include "linedegen/bipoly.hpp"
#include "oracle.hpp"

using namespace linedegen;

namespace {

const BiPoly a = BiPoly::a();
const BiPoly b = BiPoly::b();

BiPoly lin(int ca, int cb) { return BiPoly::linear(ca, cb); }

}  // namespace

TEST(BiPoly, ZeroHasNoDegreeAndNoTerms) {
  BiPoly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.degree().has_value());
  EXPECT_EQ((a - a).size(), 0u);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(BiPoly::term(0, 3, 1), zero);
}

TEST(BiPoly, DifferenceOfSquares) { EXPECT_EQ(mul(a + b, a - b), a * a - b * b); }

TEST(BiPoly, PowZeroIsOne) { EXPECT_EQ(pow(a + b, 0), BiPoly::one()); }

TEST(BiPoly, ProductInsideCubicChernClass) {
  BiPoly expected;
  expected.accumulate({2, 0}, 2);
  expected.accumulate({1, 1}, 5);
  expected.accumulate({0, 2}, 2);
  EXPECT_EQ(mul(lin(2, 1), lin(1, 2)), expected);
  EXPECT_EQ(expected.str(), "2*a^2 + 5*a*b + 2*b^2");
}

TEST(BiPoly, DegreeAndHomogeneity) {
  BiPoly x = a * a * b + BiPoly::constant(3);
  EXPECT_EQ(x.degree(), 3u);
  EXPECT_FALSE(x.is_homogeneous(3));
  EXPECT_TRUE((a * b).is_homogeneous(2));
}

TEST(BiPoly, Symmetry) {
  EXPECT_TRUE(is_symmetric(a + b));
  EXPECT_FALSE(is_symmetric(a - b));
  const BiPoly top3 = BiPoly::term(9, 1, 1) * mul(lin(2, 1), lin(1, 2));
  EXPECT_TRUE(is_symmetric(top3));
  EXPECT_TRUE(is_antisymmetric(a - b));
}

TEST(BiPoly, DivideByVandermonde) {
  EXPECT_EQ(divide_by_vandermonde(a * a - b * b), a + b);
  EXPECT_EQ(divide_by_vandermonde(pow(a, 3) * b - a * pow(b, 3)), a * b * (a + b));
  EXPECT_EQ(divide_by_vandermonde(a - b), BiPoly::one());
}

TEST(BiPoly, DivideByVandermondeRejectsRemainder) {
  EXPECT_THROW(divide_by_vandermonde(a + b), InvariantViolation);
  EXPECT_THROW(divide_by_vandermonde(BiPoly::one()), InvariantViolation);
}

TEST(BiPoly, DivisionByZeroIsArgumentError) { EXPECT_THROW(try_divide(a, BiPoly{}), ArgumentError); }

TEST(Partition2, RejectsIncreasingRows) { EXPECT_THROW(Partition2(1, 2), ArgumentError); }

TEST(Schur, LinearAndSquare) {
  SchurExpansion e1;
  e1.accumulate({1, 0}, 1);
  EXPECT_EQ(to_schur(a + b), e1);

  SchurExpansion sq;
  sq.accumulate({2, 0}, 1);
  sq.accumulate({1, 1}, 1);
  EXPECT_EQ(to_schur(pow(a + b, 2)), sq);
}

TEST(Schur, TopClassOfCubicSymmetricPower) {
  // 9ab(2(a+b)^2 + ab)
  const BiPoly top = BiPoly::term(9, 1, 1) * (2 * pow(a + b, 2) + a * b);
  const SchurExpansion s = to_schur(top);
  EXPECT_EQ(s.coeffs().size(), 2u);
  EXPECT_EQ(s.coeff({3, 1}), 18);
  EXPECT_EQ(s.coeff({2, 2}), 27);
}

TEST(Schur, AsymmetricInputIsPreconditionError) { EXPECT_THROW(to_schur(a), PreconditionError); }

TEST(Schur, SchurPolynomialMatchesBialternantAtPoints) {
  for (unsigned p = 0; p <= 7; ++p)
    for (unsigned q = 0; q <= p; ++q) {
      const BiPoly s = schur_polynomial({p, q});
      for (int av : {2, 5, -3})
        for (int bv : {1, -1, 7})
          EXPECT_EQ(oracle::eval(s, av, bv), oracle::schur_at(p, q, av, bv)) << p << "," << q;
    }
}

TEST(Schur, BasisPolynomialMapsToUnitEntry) {
  for (unsigned p = 0; p <= 10; ++p)
    for (unsigned q = 0; q <= p; ++q) {
      SchurExpansion unit;
      unit.accumulate({p, q}, 1);
      EXPECT_EQ(to_schur(schur_polynomial({p, q})), unit);
    }
}

TEST(BiPolyProperty, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly x = oracle::random_poly(rng, 6);
    const BiPoly y = oracle::random_poly(rng, 6);
    const BiPoly z = oracle::random_poly(rng, 6);
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x - x, BiPoly{});
    // evaluation is a ring map
    EXPECT_EQ(oracle::eval(x * y, 3, -2), oracle::eval(x, 3, -2) * oracle::eval(y, 3, -2));
  }
}

TEST(BiPolyProperty, SchurRoundTripUpToDegree12) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly x = oracle::random_symmetric(rng, 12, 1000);
    EXPECT_EQ(to_schur(x).reconstruct(), x);
  }
}

TEST(BiPolyProperty, VandermondeDivisionInvertsMultiplication) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly q = oracle::random_poly(rng, 12, 1000, 10);
    EXPECT_EQ(divide_by_vandermonde(mul(q, vandermonde())), q);
  }
}

TEST(BiPolyProperty, NoOverflowOnLargePowers) {
  // (2a + 3b)^200 evaluated at (1, 1) is 5^200.
  EXPECT_EQ(oracle::eval(pow(lin(2, 3), 200), 1, 1), oracle::ipow(5, 200));
}
