#include <random>

#include <gtest/gtest.h>

#include "ffl/field.hpp"
#include "ffl/poly.hpp"

using namespace ffl;

TEST(FieldSpec, ScalarOps) {
  FieldSpec f5(5);
  EXPECT_EQ(f5.mul(2, 3), 1u);
  EXPECT_EQ(f5.inv(2), 3u);
  EXPECT_EQ(f5.add(4, 3), 2u);
  EXPECT_EQ(f5.sub(1, 3), 3u);
  EXPECT_EQ(f5.neg(0), 0u);
  EXPECT_EQ(f5.pow(2, 4), 1u);
  EXPECT_EQ(f5.reduce(-7), 3u);
  EXPECT_EQ(f5.residue_class_mod_4(), 1u);
  EXPECT_EQ(FieldSpec(7).residue_class_mod_4(), 3u);
}

TEST(FieldSpec, RejectsBadModulus) {
  EXPECT_THROW(FieldSpec(2), std::invalid_argument);
  EXPECT_THROW(FieldSpec(9), std::invalid_argument);
  EXPECT_THROW(FieldSpec(1), std::invalid_argument);
  EXPECT_THROW(FieldSpec(65537), std::invalid_argument);
  EXPECT_NO_THROW(FieldSpec(65521));
}

TEST(FieldSpec, InverseOfZeroThrows) {
  FieldSpec f(5);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_THROW(FieldElement(f, 0).inv(), std::domain_error);
}

TEST(FieldSpec, Legendre) {
  FieldSpec f(5);
  EXPECT_EQ(f.legendre(0), 0);
  EXPECT_EQ(f.legendre(1), 1);
  EXPECT_EQ(f.legendre(2), -1);
  EXPECT_EQ(f.legendre(4), 1);
}

TEST(FieldSpec, LegendreMultiplicativeAndBalanced) {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    FieldSpec f(q);
    int squares = 0;
    for (Coeff a = 1; a < q; ++a) {
      squares += f.legendre(a) == 1;
      for (Coeff b = 1; b < q; ++b) EXPECT_EQ(f.legendre(a) * f.legendre(b), f.legendre(f.mul(a, b)));
    }
    EXPECT_EQ(squares, static_cast<int>((q - 1) / 2)) << q;
  }
}

TEST(FieldElement, Operators) {
  FieldSpec f(7);
  FieldElement a(f, 3), b(f, -2);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a - b).value(), 5u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a * a.inv()).value(), 1u);
  EXPECT_EQ(a.pow(6).value(), 1u);
  EXPECT_EQ(FieldElement(f, 2).legendre(), 1);
}

TEST(Irreducible, SmallestModulus) {
  EXPECT_EQ(find_irreducible(PolyRing(3), 1), (Poly{0, 1}));
  EXPECT_EQ(find_irreducible(PolyRing(3), 2), (Poly{1, 0, 1}));
  EXPECT_EQ(find_irreducible(PolyRing(5), 2), (Poly{2, 0, 1}));
  EXPECT_THROW(find_irreducible(PolyRing(5), 0), std::invalid_argument);
}

TEST(ExtField, F9Arithmetic) {
  FieldSpec f3(3);
  ExtField f9(f3, 2);
  ASSERT_EQ(std::vector<Coeff>(f9.modulus().begin(), f9.modulus().end()), (std::vector<Coeff>{1, 0, 1}));
  const auto t = f9.from_index(3);  // 0 + 1*t
  EXPECT_EQ(f9.mul(t, t), f9.embed(2));
  EXPECT_EQ(f9.order(), 9u);
}

TEST(ExtField, QuadraticCharacter) {
  ExtField f9(FieldSpec(3), 2);
  EXPECT_EQ(f9.quadratic_character(f9.zero()), 0);
  EXPECT_EQ(f9.quadratic_character(f9.embed(2)), 1);
  // t = (1 + 2t)^2, so t is a square
  EXPECT_EQ(f9.quadratic_character(f9.from_index(3)), 1);
  const ExtField::Element one_two_t{1, 2};
  EXPECT_EQ(f9.mul(one_two_t, one_two_t), f9.from_index(3));
  int squares = 0;
  for (std::uint64_t i = 1; i < 9; ++i) squares += f9.quadratic_character(f9.from_index(i)) == 1;
  EXPECT_EQ(squares, 4);
}

TEST(ExtField, RejectsReducibleModulus) {
  FieldSpec f3(3);
  EXPECT_THROW(ExtField(f3, Poly{2, 0, 1}), std::invalid_argument);  // x^2 - 1
  EXPECT_THROW(ExtField(f3, Poly{1, 0, 2}), std::invalid_argument);  // not monic
  EXPECT_NO_THROW(ExtField(f3, Poly{2, 1, 1}));
}

TEST(ExtField, InverseOfZeroThrows) {
  ExtField f(FieldSpec(5), 3);
  EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(ExtField, IndexRoundTrip) {
  ExtField f(FieldSpec(5), 2);
  for (std::uint64_t i = 0; i < f.order(); ++i) EXPECT_EQ(f.to_index(f.from_index(i)), i);
}

class ExtFieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, unsigned>> {};

TEST_P(ExtFieldAxioms, RandomElements) {
  const auto [q, n] = GetParam();
  ExtField f(FieldSpec(q), n);
  std::mt19937_64 rng(q * 100 + n);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = f.from_index(rng() % f.order());
    const auto b = f.from_index(rng() % f.order());
    const auto c = f.from_index(rng() % f.order());
    EXPECT_EQ(f.mul(a, b), f.mul(b, a));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.sub(f.add(a, b), b), a);
    if (!f.is_zero(a)) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
      EXPECT_EQ(f.pow(a, f.order() - 1), f.one());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ExtFieldAxioms,
                         ::testing::Values(std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{3u, 3u},
                                           std::pair{3u, 4u}, std::pair{5u, 1u}, std::pair{5u, 2u},
                                           std::pair{5u, 3u}, std::pair{5u, 4u}));

TEST(ExtField, EvaluatePolynomial) {
  ExtField f9(FieldSpec(3), 2);
  const Poly D{0, 1, 0, 1};  // x^3 + x
  for (std::uint64_t i = 0; i < 3; ++i) {
    const auto x = f9.from_index(i);
    EXPECT_EQ(f9.evaluate(D, x), f9.embed(PolyRing(3).eval(D, static_cast<Coeff>(i))));
  }
}
