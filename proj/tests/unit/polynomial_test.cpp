#include <gtest/gtest.h>

#include "premetric/error.hpp"
#include "premetric/polynomial.hpp"
#include "premetric/random_forms.hpp"

namespace premetric {
namespace {

Polynomial x(int i, int n = 3) { return Polynomial::variable(n, i); }
Polynomial c(long v, int n = 3) { return Polynomial::constant(n, Scalar(v)); }

TEST(Scalar, GaussianArithmetic) {
  Scalar a(Rational(1, 2), Rational(3));
  Scalar b(Rational(-2), Rational(1, 3));
  EXPECT_EQ(a * b, Scalar(Rational(-2), Rational(-35, 6)));
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_THROW((void)Scalar(0).inverse(), DomainError);
  EXPECT_EQ(Scalar(Rational(2, 4)), Scalar::fraction(1, 2));
}

TEST(Scalar, ToString) {
  EXPECT_EQ(Scalar::fraction(-3, 4).to_string(), "-3/4");
  EXPECT_EQ(Scalar::i().to_string(), "i");
  EXPECT_EQ((-Scalar::i()).to_string(), "-i");
  EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).to_string(), "1/2 - 3*i");
}

TEST(PolyAdd, Examples) {
  EXPECT_TRUE(poly_add(x(0), -x(0)).is_zero());
  EXPECT_EQ(poly_add(x(0) * x(1), x(0) * x(1)), Scalar(2) * (x(0) * x(1)));
  Polynomial sum = poly_add(x(0) * x(0) + c(1), x(1));
  EXPECT_EQ(sum.to_string(), "x0^2 + x1 + 1");
}

TEST(PolyAdd, MismatchIsStructural) {
  EXPECT_THROW((void)(x(0, 3) + x(0, 4)), StructuralError);
  Polynomial complex = x(0).complexified();
  EXPECT_THROW((void)(x(0) + complex), StructuralError);
  EXPECT_THROW((void)Polynomial::constant(3, Scalar::i()), StructuralError);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(poly_mul(x(0), x(1)).to_string(), "x0*x1");
  EXPECT_EQ(poly_mul(x(0) + c(1), x(0) - c(1)).to_string(), "x0^2 - 1");
  EXPECT_TRUE(poly_mul(c(0), x(0) + x(2)).is_zero());
}

TEST(PolyPartial, Examples) {
  Polynomial p = x(0) * x(1) * x(1);
  EXPECT_EQ(poly_partial(p, 1), Scalar(2) * (x(0) * x(1)));
  EXPECT_TRUE(poly_partial(c(5), 0).is_zero());
  EXPECT_THROW((void)poly_partial(p, 3), DomainError);
  EXPECT_THROW((void)poly_partial(p, -1), DomainError);
}

TEST(PolyDegree, ProductDegreeAdds) {
  FormSampler rng(7, 3);
  Chart chart(4);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial a = rng.polynomial(chart);
    Polynomial b = rng.polynomial(chart);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, HoldExactly) {
  Chart chart(GetParam());
  FormSampler rng(100 + static_cast<std::uint64_t>(GetParam()), 2);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = rng.polynomial(chart);
    Polynomial b = rng.polynomial(chart);
    Polynomial d = rng.polynomial(chart);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
    for (int i = 0; i < chart.n; ++i) {
      // derivation rule
      EXPECT_EQ((a * b).partial(i), a.partial(i) * b + a * b.partial(i));
      for (int j = 0; j < chart.n; ++j) EXPECT_EQ(a.partial(i).partial(j), a.partial(j).partial(i));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, RingAxioms, ::testing::Values(1, 2, 3, 5));

TEST(Polynomial, CanonicalNoZeroCoefficients) {
  Polynomial p = x(0) + x(1) - x(0);
  EXPECT_EQ(p.terms().size(), 1U);
  EXPECT_EQ(p, x(1));
}

TEST(Polynomial, LinearSubstitution) {
  // x0 -> y0 + y1, x1 -> 2 y1 on p = x0 * x1
  std::vector<Rational> l{1, 1, 0, 2};
  Polynomial p = x(0, 2) * x(1, 2);
  Polynomial expected = (x(0, 2) + x(1, 2)) * (Scalar(2) * x(1, 2));
  EXPECT_EQ(p.substitute_linear(l), expected);
}

TEST(Polynomial, ToStringOrdering) {
  Polynomial p = x(0) * x(0) * x(1) - Polynomial::constant(3, Scalar::fraction(1, 3)) + Scalar(-2) * x(2);
  EXPECT_EQ(p.to_string(), "x0^2*x1 - 2*x2 - 1/3");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
}

}  // namespace
}  // namespace premetric
