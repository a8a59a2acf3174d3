#include <gtest/gtest.h>

#include <random>

#include "crystal/base_ring.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace crystal;

TEST(BaseRing, ArithExamples) {
  auto z4 = BaseRing::modular(4);
  EXPECT_EQ(arith(z4, ArithOp::mul, Residue{2}, Residue{2}), RingValue(Residue{0}));

  auto q = BaseRing::rationals();
  EXPECT_EQ(arith(q, ArithOp::add, rational_value(1, 2), rational_value(1, 3)), rational_value(5, 6));

  auto gauss = BaseRing::quadratic(-1);
  EXPECT_EQ(arith(gauss, ArithOp::mul, quadratic_value(0, 1), quadratic_value(0, 1)), quadratic_value(-1, 0));
}

TEST(BaseRing, ArithRejectsKindMismatch) {
  auto z = BaseRing::integers();
  EXPECT_THROW(arith(z, ArithOp::add, Integer(1), Residue{1}), InputError);
  EXPECT_THROW(arith(BaseRing::modular(3), ArithOp::neg, Residue{5}), InputError);
  EXPECT_THROW(arith(z, ArithOp::mul, Integer(2)), InputError);
}

TEST(BaseRing, RationalsStayNormalized) {
  auto q = BaseRing::rationals();
  auto v = std::get<Rational>(q.add(rational_value(2, -4), rational_value(1, 1)));
  EXPECT_EQ(boost::multiprecision::numerator(v), 1);
  EXPECT_EQ(boost::multiprecision::denominator(v), 2);
}

TEST(BaseRing, ConstructionInvariants) {
  EXPECT_THROW(BaseRing::modular(1), InputError);
  EXPECT_THROW(BaseRing::quadratic(0), InputError);
  EXPECT_THROW(BaseRing::quadratic(1), InputError);
  EXPECT_THROW(BaseRing::quadratic(12), InputError);
  EXPECT_THROW(BaseRing::pair_product(4), InputError);
  EXPECT_EQ(BaseRing::modular(6).characteristic(), 6);
  EXPECT_EQ(BaseRing::pair_product(5).characteristic(), 5);
  EXPECT_EQ(BaseRing::quadratic(-1).characteristic(), 0);
  EXPECT_EQ(BaseRing::integers().characteristic(), 0);
}

TEST(BaseRing, IsRegularExamples) {
  EXPECT_FALSE(BaseRing::modular(4).is_regular(Residue{2}));
  EXPECT_TRUE(BaseRing::integers().is_regular(Integer(5)));
  // Oracle: multiply 5 by each residue mod 6, none but 0 gives 0.
  EXPECT_FALSE(oracle::zero_divisor_partner(5, 6).has_value());
  EXPECT_TRUE(BaseRing::modular(6).is_regular(Residue{5}));
}

TEST(BaseRing, TryInvertExamples) {
  EXPECT_EQ(BaseRing::rationals().try_invert(rational_value(2, 3)), std::optional<RingValue>(rational_value(3, 2)));
  EXPECT_EQ(BaseRing::modular(5).try_invert(Residue{3}), std::optional<RingValue>(Residue{2}));
  EXPECT_FALSE(BaseRing::integers().try_invert(Integer(2)).has_value());
  EXPECT_FALSE(BaseRing::quadratic(-1).try_invert(quadratic_value(1, 1)).has_value());
  EXPECT_EQ(BaseRing::quadratic(-1).try_invert(quadratic_value(0, 1)), std::optional<RingValue>(quadratic_value(0, -1)));
  // 1 + sqrt2 is a unit of Z[sqrt2] with inverse -1 + sqrt2.
  EXPECT_EQ(BaseRing::quadratic(2).try_invert(quadratic_value(1, 1)), std::optional<RingValue>(quadratic_value(-1, 1)));
}

TEST(BaseRing, AutomorphismExamples) {
  EXPECT_EQ(BaseRing::quadratic(-1).apply(Automorphism::quadratic_conjugation, quadratic_value(2, 3)),
            quadratic_value(2, -3));
  EXPECT_EQ(BaseRing::pair_product(2).apply(Automorphism::pair_swap, PairValue{1, 0}), RingValue(PairValue{0, 1}));
  EXPECT_EQ(BaseRing::integers().apply(Automorphism::identity, Integer(7)), RingValue(Integer(7)));
  EXPECT_THROW(BaseRing::integers().apply(Automorphism::pair_swap, Integer(7)), InputError);
}

TEST(BaseRing, EnumerateExamples) {
  std::vector<RingValue> z3{Residue{0}, Residue{1}, Residue{2}};
  EXPECT_EQ(BaseRing::modular(3).enumerate(), z3);
  std::vector<RingValue> p2{PairValue{0, 0}, PairValue{0, 1}, PairValue{1, 0}, PairValue{1, 1}};
  EXPECT_EQ(BaseRing::pair_product(2).enumerate(), p2);
  try {
    BaseRing::integers().enumerate();
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("infinite"), std::string::npos);
  }
}

TEST(BaseRing, DivideIsExact) {
  auto z = BaseRing::integers();
  EXPECT_EQ(z.divide(Integer(12), Integer(4)), std::optional<RingValue>(Integer(3)));
  EXPECT_FALSE(z.divide(Integer(12), Integer(5)).has_value());
  auto gauss = BaseRing::quadratic(-1);
  EXPECT_EQ(gauss.divide(quadratic_value(2, 0), quadratic_value(1, 1)),
            std::optional<RingValue>(quadratic_value(1, -1)));
  EXPECT_FALSE(gauss.divide(quadratic_value(1, 0), quadratic_value(1, 1)).has_value());
}

TEST(BaseRingProperty, RingAxiomsOnSamples) {
  std::mt19937_64 rng(20240611);
  for (const auto& R : fixtures::sample_rings()) {
    for (int trial = 0; trial < 200; ++trial) {
      auto a = fixtures::random_value(R, rng);
      auto b = fixtures::random_value(R, rng);
      auto c = fixtures::random_value(R, rng);
      ASSERT_EQ(R.add(R.add(a, b), c), R.add(a, R.add(b, c))) << R.name();
      ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))) << R.name();
      ASSERT_EQ(R.add(a, b), R.add(b, a)) << R.name();
      ASSERT_EQ(R.mul(a, b), R.mul(b, a)) << R.name();
      ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c))) << R.name();
      ASSERT_TRUE(R.is_zero(R.add(a, R.neg(a)))) << R.name();
      ASSERT_EQ(R.mul(a, R.one()), a) << R.name();
    }
  }
}

TEST(BaseRingProperty, RegularityMatchesExhaustiveSearch) {
  for (const auto& R : fixtures::sample_rings()) {
    if (!R.is_finite()) continue;
    const auto elems = R.enumerate();
    for (const auto& a : elems) {
      bool has_partner = false;
      for (const auto& x : elems)
        if (!R.is_zero(x) && R.is_zero(R.mul(a, x))) has_partner = true;
      EXPECT_EQ(R.is_regular(a), !has_partner) << R.name() << " " << R.format(a);
    }
  }
}

TEST(BaseRingProperty, InversesMultiplyToOne) {
  std::mt19937_64 rng(7);
  for (const auto& R : fixtures::sample_rings()) {
    for (int trial = 0; trial < 200; ++trial) {
      auto a = fixtures::random_value(R, rng, 3);
      if (auto b = R.try_invert(a)) ASSERT_TRUE(R.is_one(R.mul(a, *b))) << R.name();
    }
  }
}

TEST(BaseRingProperty, AutomorphismsAreRingMorphisms) {
  std::mt19937_64 rng(11);
  for (const auto& R : fixtures::sample_rings()) {
    std::vector<Automorphism> specs{Automorphism::identity};
    for (auto s : R.nontrivial_automorphisms()) specs.push_back(s);
    for (auto s : specs) {
      EXPECT_TRUE(R.is_zero(R.apply(s, R.zero())));
      EXPECT_TRUE(R.is_one(R.apply(s, R.one())));
      for (int trial = 0; trial < 100; ++trial) {
        auto a = fixtures::random_value(R, rng);
        auto b = fixtures::random_value(R, rng);
        ASSERT_EQ(R.apply(s, R.add(a, b)), R.add(R.apply(s, a), R.apply(s, b)));
        ASSERT_EQ(R.apply(s, R.mul(a, b)), R.mul(R.apply(s, a), R.apply(s, b)));
        ASSERT_EQ(R.apply(s, R.apply(s, a)), a);
      }
    }
  }
}
