#include <random>

#include <gtest/gtest.h>

#include "ffl/characters.hpp"
#include "ffl/irreducible.hpp"

using namespace ffl;

TEST(ResidueSymbol, PrimeDenominator) {
  PolyRing r(3);
  const Poly x{0, 1}, x1{1, 1};
  EXPECT_EQ(residue_symbol_prime(x1, x, r), 1);
  EXPECT_EQ(residue_symbol_prime(x, x1, r), -1);
  EXPECT_EQ(residue_symbol_prime(x1, x1, r), 0);
}

TEST(ResidueSymbol, Errors) {
  PolyRing r(3);
  EXPECT_THROW(residue_symbol_prime(Poly{1, 1}, Poly{2, 0, 1}, r), std::domain_error);  // x^2 - 1
  EXPECT_THROW(residue_symbol_prime(Poly{0, 1}, Poly{1, 2}, r), std::domain_error);     // not monic
  EXPECT_THROW(residue_symbol_prime(Poly{0, 1}, Poly{1}, r), std::domain_error);
}

TEST(Jacobi, Examples) {
  PolyRing r(3);
  const Poly D{0, 1, 0, 1};
  for (const auto& Q : r.monics(3)) EXPECT_EQ(jacobi(Poly{1}, Q, r), 1);
  EXPECT_EQ(jacobi(Poly{0, 1}, Poly{1, 0, 1}, r), 1);
  EXPECT_EQ(jacobi(D, Poly{2, 1}, r), -1);
  EXPECT_EQ(jacobi(D, Poly{1}, r), 1);
  EXPECT_EQ(jacobi(Poly{}, Poly{0, 1}, r), 0);
  EXPECT_EQ(jacobi(Poly{}, Poly{1}, r), 1);
}

TEST(Jacobi, RejectsNonMonicDenominator) {
  PolyRing r(5);
  IrreducibleTable t(r, 2);
  EXPECT_THROW(jacobi(Poly{0, 1}, Poly{1, 2}, r), std::domain_error);
  EXPECT_THROW(jacobi(Poly{0, 1}, Poly{}, r), std::domain_error);
  EXPECT_THROW(jacobi_by_factorization(Poly{0, 1}, Poly{1, 2}, t), std::domain_error);
}

TEST(Chi, Examples) {
  PolyRing r(3);
  const Poly D{0, 1, 0, 1};
  EXPECT_EQ(chi(D, Poly{1}, r), 1);
  EXPECT_EQ(chi(D, Poly{0, 1}, r), 0);
  EXPECT_EQ(chi(D, Poly{1, 1}, r), 1);
}

TEST(ScalarSymbol, MatchesLegendrePower) {
  PolyRing r(5);
  IrreducibleTable t(r, 3);
  for (Coeff a = 1; a < 5; ++a)
    for (unsigned d = 0; d <= 3; ++d) {
      const int expect = d % 2 ? r.field().legendre(a) : 1;
      EXPECT_EQ(scalar_symbol(a, d, r.field()), expect);
      for (const auto& Q : r.monics(d)) {
        EXPECT_EQ(jacobi(Poly{a}, Q, r), expect);
        EXPECT_EQ(jacobi_by_factorization(Poly{a}, Q, t), expect);
      }
    }
}

// Both algorithms on every (f, Q) with deg f, deg Q <= 4; a random slice up to 6.
TEST(Jacobi, DualAlgorithmsAgree) {
  for (std::uint32_t q : {3u, 5u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 3);
    const unsigned exhaustive = q == 3 ? 4 : 3;
    for (unsigned dq = 0; dq <= exhaustive; ++dq)
      for (const auto& Q : r.monics(dq))
        for (unsigned df = 0; df <= exhaustive; ++df)
          for (const auto& f : r.monics(df))
            for (Coeff c : {Coeff{1}, Coeff{2}}) {
              const Poly cf = r.scale(f, c);
              ASSERT_EQ(jacobi(cf, Q, r), jacobi_by_factorization(cf, Q, t)) << to_string(cf) << " / " << to_string(Q);
            }
    std::mt19937_64 rng(q);
    for (int trial = 0; trial < 20000; ++trial) {
      const unsigned dq = 1 + rng() % 6, df = rng() % 7;
      const Poly Q = r.monic_from_index(dq, rng() % r.monic_count(dq));
      const Poly f = r.scale(r.monic_from_index(df, rng() % r.monic_count(df)), 1 + rng() % (q - 1));
      ASSERT_EQ(jacobi(f, Q, r), jacobi_by_factorization(f, Q, t)) << to_string(f) << " / " << to_string(Q);
    }
  }
}

TEST(Jacobi, ZeroExactlyWhenNotCoprime) {
  PolyRing r(5);
  for (const auto& Q : r.monics(2))
    for (const auto& f : r.monics(3)) EXPECT_EQ(jacobi(f, Q, r) == 0, !r.gcd(f, Q).is_one());
}

TEST(Reciprocity, Examples) {
  PolyRing r3(3);
  IrreducibleTable t3(r3, 3);
  EXPECT_TRUE(reciprocity_check(Poly{0, 1}, Poly{1, 1}, t3));
  EXPECT_THROW(reciprocity_check(Poly{0, 1}, Poly{0, 1}, t3), std::domain_error);
  EXPECT_THROW(reciprocity_check(Poly{0, 2}, Poly{1, 1}, t3), std::domain_error);
}

TEST(Reciprocity, SymmetricWhenQIsOneModFour) {
  PolyRing r(5);
  for (unsigned da = 1; da <= 3; ++da)
    for (const auto& A : r.monics(da))
      for (unsigned db = 1; db <= 3; ++db)
        for (const auto& B : r.monics(db))
          if (r.gcd(A, B).is_one()) ASSERT_EQ(jacobi(A, B, r), jacobi(B, A, r));
}

TEST(Reciprocity, AllCoprimePairs) {
  for (std::uint32_t q : {3u, 5u, 13u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 3);
    const unsigned maxdeg = q == 3 ? 5 : (q == 5 ? 3 : 2);
    std::uint64_t checked = 0;
    for (unsigned da = 1; da <= maxdeg; ++da)
      for (const auto& A : r.monics(da))
        for (unsigned db = da; db <= maxdeg; ++db)
          for (const auto& B : r.monics(db)) {
            if (!r.gcd(A, B).is_one()) continue;
            ASSERT_TRUE(reciprocity_check(A, B, t)) << to_string(A) << ", " << to_string(B);
            ++checked;
          }
    EXPECT_GT(checked, 0u);
  }
}

// Random degree-5 pairs at q = 5 and q = 13 fill in what the exhaustive loop skips.
TEST(Reciprocity, RandomHighDegreePairs) {
  for (std::uint32_t q : {5u, 13u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 3);
    std::mt19937_64 rng(q + 1);
    for (int trial = 0; trial < 3000; ++trial) {
      const unsigned da = 1 + rng() % 5, db = 1 + rng() % 5;
      const Poly A = r.monic_from_index(da, rng() % r.monic_count(da));
      const Poly B = r.monic_from_index(db, rng() % r.monic_count(db));
      if (!r.gcd(A, B).is_one()) continue;
      ASSERT_TRUE(reciprocity_check(A, B, t)) << to_string(A) << ", " << to_string(B);
    }
  }
}

TEST(Chi, CompletelyMultiplicative) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    PolyRing r(q);
    std::mt19937_64 rng(q * 3);
    for (int trial = 0; trial < 2000; ++trial) {
      const unsigned dD = 1 + rng() % 7, df = rng() % 5, dg = rng() % 5;
      const Poly D = r.monic_from_index(dD, rng() % r.monic_count(dD));
      const Poly f = r.monic_from_index(df, rng() % r.monic_count(df));
      const Poly g = r.monic_from_index(dg, rng() % r.monic_count(dg));
      ASSERT_EQ(chi(D, r.mul(f, g), r), chi(D, f, r) * chi(D, g, r));
      ASSERT_EQ(jacobi(r.mul(D, f), g, r), jacobi(D, g, r) * jacobi(f, g, r));
    }
  }
}
