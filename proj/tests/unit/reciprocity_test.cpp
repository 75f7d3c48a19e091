#include <gtest/gtest.h>

#include "premetric/error.hpp"
#include "premetric/random_forms.hpp"
#include "premetric/reciprocity.hpp"

namespace premetric {
namespace {

const Chart k4(4);
const Chart c4 = k4.complexified();
constexpr Twist kT = Twist::Twisted;

Form dx(const Chart& c, std::initializer_list<int> idx, Twist t = Twist::Untwisted) {
  return Form::basis(c, idx, t);
}

TEST(StarZ, Example) {
  FieldPairZ p(dx(k4, {0, 1}), dx(k4, {2, 3}, kT), pseudo(Scalar(2)));
  FieldPairZ img = star_z(p);
  EXPECT_EQ(img.F(), form_scale(dx(k4, {2, 3}), Scalar(2)));
  EXPECT_EQ(img.G(), form_scale(dx(k4, {0, 1}, kT), Scalar::fraction(-1, 2)));
  EXPECT_EQ(img.F().twist(), Twist::Untwisted);
  EXPECT_EQ(img.G().twist(), kT);
}

TEST(StarZ, SquaresToMinusIdentity) {
  FormSampler rng(53, 2);
  for (Scalar z : {Scalar(1), Scalar(2), Scalar(-3), Scalar::fraction(1, 5)}) {
    for (int i = 0; i < 5; ++i) {
      FieldPairZ p(rng.form(k4, 2), rng.form(k4, 2, kT), pseudo(z));
      FieldPairZ twice = star_z(star_z(p));
      EXPECT_EQ(twice.F(), -p.F());
      EXPECT_EQ(twice.G(), -p.G());
    }
  }
  FieldPairZ zero(Form(k4, 2), Form(k4, 2, kT), pseudo(Scalar(7)));
  EXPECT_TRUE(star_z(zero).F().is_zero());
  EXPECT_TRUE(star_z(zero).G().is_zero());
}

TEST(StarZ, RejectsBadPairs) {
  EXPECT_THROW(FieldPairZ(dx(k4, {0, 1}), dx(k4, {2, 3}, kT), pseudo(Scalar(0))), DomainError);
  EXPECT_THROW(FieldPairZ(dx(k4, {0, 1}), dx(k4, {2, 3}), pseudo(Scalar(1))), StructuralError);
  EXPECT_THROW(FieldPairZ(dx(k4, {0}), dx(k4, {1, 2, 3}, kT), pseudo(Scalar(1))), StructuralError);
  EXPECT_THROW(FieldPairZ(dx(k4, {0, 1}), dx(k4, {2, 3}, kT), pseudo(Scalar::i())), StructuralError);
}

TEST(StarZ, NoSingleFormOperator) {
  // Same first slot, different partners: the images of F differ, so no map
  // H -> "star H" on single 2-forms can reproduce the pair operator.
  Form F = dx(k4, {0, 1});
  FieldPairZ a(F, dx(k4, {2, 3}, kT), pseudo(Scalar(1)));
  FieldPairZ b(F, dx(k4, {0, 2}, kT), pseudo(Scalar(1)));
  EXPECT_NE(star_z(a).F(), star_z(b).F());
}

TEST(PairTensor, InvariantUnderRescaling) {
  FormSampler rng(59, 2);
  for (int i = 0; i < 5; ++i) {
    FieldPairZ p(rng.form(k4, 2), rng.form(k4, 2, kT), pseudo(Scalar(2)));
    Scalar k(3);
    FieldPairZ scaled(form_scale(p.F(), k), form_scale(p.G(), k.inverse()), p.z());
    EXPECT_EQ(pair_tensor(scaled), pair_tensor(p));
  }
}

TEST(PairTensor, ReciprocityActsWithoutZ) {
  FormSampler rng(61, 2);
  for (int i = 0; i < 5; ++i) {
    Form F = rng.form(k4, 2);
    Form G = rng.form(k4, 2, kT);
    for (Scalar z : {Scalar(1), Scalar(-3), Scalar::fraction(2, 7)}) {
      FieldPairZ p(F, G, pseudo(z));
      EXPECT_EQ(pair_tensor(star_z(p)), pair_tensor(p).reciprocal());
    }
    // zG (x) (-z^{-1} F) = -G (x) F
    FieldPairZ swapped(G.with_twist(Twist::Untwisted), F.with_twist(kT), pseudo(Scalar(1)));
    PairTensor minus_gf = pair_tensor(swapped);
    FieldPairZ p(F, G, pseudo(Scalar(5)));
    const PairTensor image = pair_tensor(star_z(p));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(image(a, b), -minus_gf(a, b));
  }
  FieldPairZ zero(Form(k4, 2), Form(k4, 2, kT), pseudo(Scalar(2)));
  EXPECT_TRUE(pair_tensor(zero).is_zero());
}

TEST(SelfReciprocal, Example) {
  FieldPairZ p(dx(c4, {0, 1}), dx(c4, {2, 3}, kT), pseudo(Scalar(1)));
  FieldPairZ plus = self_reciprocal_pair(p, Eigen::Plus);
  Form i23 = form_scale(dx(c4, {2, 3}), Scalar::i());
  Form i01 = form_scale(dx(c4, {0, 1}, kT), Scalar::i());
  EXPECT_EQ(plus.F(), dx(c4, {0, 1}) - i23);
  EXPECT_EQ(plus.G(), dx(c4, {2, 3}, kT) + i01);
  FieldPairZ img = star_z(plus);
  EXPECT_EQ(img.F(), form_scale(plus.F(), Scalar::i()));
  EXPECT_EQ(img.G(), form_scale(plus.G(), Scalar::i()));
}

TEST(SelfReciprocal, EigenRelations) {
  FormSampler rng(67, 2);
  for (Scalar z : {Scalar(1), Scalar(2), Scalar(-3), Scalar::fraction(1, 5)}) {
    for (int i = 0; i < 4; ++i) {
      FieldPairZ p(rng.form(c4, 2), rng.form(c4, 2, kT), pseudo(z));
      FieldPairZ plus = self_reciprocal_pair(p, Eigen::Plus);
      FieldPairZ minus = self_reciprocal_pair(p, Eigen::Minus);
      for (auto [sr, s] : {std::pair{plus, 1L}, std::pair{minus, -1L}}) {
        Scalar eig = Scalar(s) * Scalar::i();
        FieldPairZ img = star_z(sr);
        EXPECT_EQ(img.F(), form_scale(sr.F(), eig));
        EXPECT_EQ(img.G(), form_scale(sr.G(), eig));
        // F^{+-} = -+ i z G^{+-}
        EXPECT_EQ(sr.F(), form_scale(sr.G(), Pseudo<Scalar>{Scalar(-s) * Scalar::i() * z}));
      }
      EXPECT_EQ(plus.F() + minus.F(), form_scale(p.F(), Scalar(2)));
    }
  }
  FieldPairZ real(dx(k4, {0, 1}), dx(k4, {2, 3}, kT), pseudo(Scalar(1)));
  EXPECT_THROW((void)self_reciprocal_pair(real, Eigen::Plus), StructuralError);
}

TEST(Factorization, Holds) {
  MetricSpec m = MetricSpec::minkowski(k4);
  FormSampler rng(71, 2);
  for (int i = 0; i < 5; ++i) {
    FactorizationReport r = check_factorization(m, pseudo(Scalar(1)), rng.form(k4, 2));
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(r.checks.size(), 6U);
  }
  // Z0 = 3, F = dx0 ^ dx2: *F = dx1 ^ dx3, G = 1/3 dx1^dx3, zG = dx1^dx3 = *F.
  Form F = dx(k4, {0, 2});
  EXPECT_EQ(hodge(m, F), dx(k4, {1, 3}));
  EXPECT_TRUE(check_factorization(m, pseudo(Scalar(3)), F).all_passed());
}

TEST(Factorization, RequiresLorentzianComplexStructure) {
  EXPECT_THROW((void)check_factorization(MetricSpec::euclidean(k4), pseudo(Scalar(1)), dx(k4, {0, 1})),
               DomainError);
  EXPECT_THROW((void)check_factorization(MetricSpec::minkowski(k4), pseudo(Scalar(0)), dx(k4, {0, 1})),
               DomainError);
}

TEST(Orientation, ReflectionFlipsZAndKeepsTwistTypes) {
  std::vector<Rational> reflect{1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  FormSampler rng(73, 2);
  for (int i = 0; i < 5; ++i) {
    FieldPairZ p(rng.form(k4, 2), rng.form(k4, 2, kT), pseudo(Scalar(2)));
    FieldPairZ pulled = pullback_pair(reflect, p);
    EXPECT_EQ(pulled.z(), pseudo(Scalar(-2)));
    EXPECT_EQ(pulled.chart(), k4.reoriented(-1));
    FieldPairZ a = star_z(pulled);
    FieldPairZ b = pullback_pair(reflect, star_z(p));
    EXPECT_EQ(a.F(), b.F());
    EXPECT_EQ(a.G(), b.G());
    EXPECT_EQ(a.F().twist(), Twist::Untwisted);
    EXPECT_EQ(a.G().twist(), kT);
  }
}

}  // namespace
}  // namespace premetric
