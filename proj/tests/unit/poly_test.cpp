#include <random>
#include <set>

#include <gtest/gtest.h>

#include "ffl/irreducible.hpp"
#include "ffl/poly.hpp"

using namespace ffl;

TEST(Poly, Basics) {
  Poly zero;
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_TRUE(Poly::constant(1).is_one());
  EXPECT_EQ(Poly::monomial(2, 3), (Poly{0, 0, 0, 2}));
  EXPECT_EQ(Poly{3}[7], 0u);
  EXPECT_LT(Poly({2, 1}), Poly({0, 0, 1}));
  EXPECT_LT(Poly({0, 1}), Poly({1, 1}));
}

TEST(Poly, Rendering) {
  EXPECT_EQ(to_coeff_list(Poly{1, 0, 3, 1}), "[1,0,3,1]");
  EXPECT_EQ(to_coeff_list(Poly{}), "[]");
  EXPECT_EQ(to_string(Poly{1, 2, 0, 1}), "x^3 + 2*x + 1");
  EXPECT_EQ(to_string(Poly{}), "0");
  EXPECT_EQ(to_string(Poly{0, 1}), "x");
}

TEST(PolyRing, Arithmetic) {
  PolyRing r(3);
  EXPECT_EQ(r.mul(r.make({1, 1}), r.make({2, 1})), r.make({2, 0, 1}));
  EXPECT_EQ(r.make({-1, 4}), (Poly{2, 1}));
  EXPECT_EQ(r.add(r.make({1, 2}), r.make({2, 1})), Poly{});
  EXPECT_EQ(r.eval(r.make({0, 1, 0, 1}), 1), 2u);
  EXPECT_EQ(r.derivative(r.make({0, 1, 0, 1})), (Poly{1}));
  EXPECT_EQ(r.derivative(r.make({0, 0, 0, 1})), Poly{});
  EXPECT_EQ(r.monic(r.make({2, 2})), (Poly{1, 1}));
  EXPECT_EQ(r.pow(r.make({1, 1}), 3), (Poly{1, 0, 0, 1}));
}

TEST(PolyRing, DivMod) {
  PolyRing r(5);
  const Poly a = r.make({3, 0, 2, 1, 4});
  const Poly b = r.make({1, 3, 2});
  const auto [quo, rem] = r.divmod(a, b);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_EQ(r.add(r.mul(quo, b), rem), a);
  EXPECT_THROW(r.divmod(a, Poly{}), std::domain_error);
  EXPECT_TRUE(r.divides(b, r.mul(a, b)));
}

TEST(PolyRing, Gcd) {
  PolyRing r(3);
  const Poly f = r.make({2, 2});
  EXPECT_EQ(r.gcd(f, Poly{}), r.monic(f));
  EXPECT_EQ(r.gcd(Poly{}, Poly{}), Poly{});
  const Poly x = r.make({0, 1}), x1 = r.make({1, 1}), x2 = r.make({2, 1});
  EXPECT_EQ(r.gcd(r.mul(x, x1), r.mul(x1, x2)), x1);
  EXPECT_TRUE(r.gcd(x, x2).is_one());
}

TEST(PolyRing, PowMod) {
  PolyRing r(3);
  const Poly m = r.make({1, 0, 1});
  EXPECT_EQ(r.pow_mod(r.make({0, 1}), 4, m), (Poly{1}));
  EXPECT_EQ(r.pow_mod(r.make({0, 1}), 2, m), (Poly{2}));
}

TEST(PolyRing, SquareFree) {
  PolyRing r(3);
  EXPECT_TRUE(r.is_squarefree(r.make({0, 1, 0, 1})));
  EXPECT_FALSE(r.is_squarefree(r.make({0, 0, 1})));
  EXPECT_FALSE(r.is_squarefree(r.make({0, 0, 0, 1})));
  EXPECT_FALSE(r.is_squarefree(r.make({1, 0, 0, 1})));  // (x+1)^3, f' = 0
  EXPECT_TRUE(r.is_squarefree(Poly{2}));
  EXPECT_THROW(r.is_squarefree(Poly{}), std::domain_error);
}

TEST(PolyRing, SquareRoot) {
  PolyRing r(5);
  const Poly h = r.make({3, 1, 1});
  EXPECT_EQ(r.sqrt(r.mul(h, h)), h);
  EXPECT_FALSE(r.sqrt(r.make({0, 1})).has_value());
  EXPECT_FALSE(r.is_square(r.make({2})));  // 2 is a non-square mod 5
  EXPECT_TRUE(r.is_square(r.make({4})));
  EXPECT_FALSE(r.is_square(r.make({1, 0, 1})));
  EXPECT_TRUE(r.is_square(Poly{1}));
}

TEST(PolyRing, MonicEnumeration) {
  PolyRing r3(3), r5(5);
  std::vector<Poly> deg0(r3.monics(0).begin(), r3.monics(0).end());
  EXPECT_EQ(deg0, std::vector<Poly>{Poly{1}});
  std::vector<Poly> deg1(r3.monics(1).begin(), r3.monics(1).end());
  EXPECT_EQ(deg1, (std::vector<Poly>{{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(r5.monics(2).size(), 25u);
  std::set<Poly> seen;
  std::uint64_t i = 0;
  for (const auto& f : r5.monics(3)) {
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(r5.index_of(f), i);
    EXPECT_EQ(r5.monic_from_index(3, i), f);
    seen.insert(f);
    ++i;
  }
  EXPECT_EQ(seen.size(), 125u);
}

TEST(PolyRing, Norm) {
  PolyRing r(5);
  EXPECT_EQ(r.norm(Poly{}), 0);
  EXPECT_EQ(r.norm(Poly{3}), 1);
  EXPECT_EQ(r.norm(r.make({1, 0, 1})), 25);
}

TEST(CheckedPow, Overflow) {
  EXPECT_EQ(checked_pow(3, 4), 81u);
  EXPECT_THROW(checked_pow(65521, 5), std::overflow_error);
}

// --- irreducible table, factorization, mu, Phi ------------------------------

TEST(IrreducibleTable, Counts) {
  PolyRing r3(3), r5(5);
  IrreducibleTable t3(r3, 4), t5(r5, 3);
  EXPECT_EQ(t3.of_degree(1), (std::vector<Poly>{{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(t3.count(2), 3u);
  EXPECT_EQ(t5.count(3), 40u);
  EXPECT_EQ(t3.up_to(2).size(), 6u);
  EXPECT_THROW(t3.of_degree(5), std::out_of_range);
  EXPECT_THROW(IrreducibleTable(r3, 0), std::invalid_argument);
}

TEST(IrreducibleTable, GaussIdentity) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    PolyRing r(q);
    const unsigned cutoff = q == 3 ? 8 : (q == 5 ? 6 : 5);
    IrreducibleTable t(r, cutoff);
    for (unsigned n = 1; n <= cutoff; ++n) {
      BigInt sum = 0;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += d * BigInt(static_cast<unsigned long>(t.count(d)));
      EXPECT_EQ(sum, BigInt(static_cast<unsigned long>(checked_pow(q, n)))) << q << " " << n;
      EXPECT_EQ(irreducible_count(q, n), BigInt(static_cast<unsigned long>(t.count(n))));
    }
  }
}

TEST(IrreducibleTable, EntriesAreIrreducible) {
  PolyRing r(5);
  IrreducibleTable t(r, 4);
  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& p : t.of_degree(d))
      for (unsigned e = 1; 2 * e <= d; ++e)
        for (const auto& f : r.monics(e)) EXPECT_FALSE(r.divides(f, p));
}

TEST(Factorize, Examples) {
  PolyRing r3(3), r5(5);
  IrreducibleTable t3(r3, 4), t5(r5, 3);
  auto fac = factorize(r3.make({0, 1, 0, 1}), t3);
  EXPECT_EQ(fac.unit, 1u);
  EXPECT_EQ(fac.factors, (std::vector<Factor>{{Poly{0, 1}, 1}, {Poly{1, 0, 1}, 1}}));
  EXPECT_EQ(factorize(r3.make({0, 0, 1}), t3).factors, (std::vector<Factor>{{Poly{0, 1}, 2}}));
  EXPECT_EQ(factorize(r5.make({0, 1}), t5).factors, (std::vector<Factor>{{Poly{0, 1}, 1}}));
  auto scaled = factorize(r5.make({0, 2}), t5);
  EXPECT_EQ(scaled.unit, 2u);
  EXPECT_THROW(factorize(Poly{}, t5), std::domain_error);
}

TEST(Factorize, CutoffExceeded) {
  PolyRing r(3);
  IrreducibleTable t(r, 1);
  // product of two irreducible quadratics: no linear factor, degree 4 > 2*1+1
  const Poly f = r.mul(r.make({1, 0, 1}), r.make({2, 1, 1}));
  EXPECT_THROW(factorize(f, t), CutoffExceeded);
  // an irreducible cubic is certified by the table reach
  EXPECT_EQ(factorize(r.make({1, 2, 0, 1}), t).factors.size(), 1u);
}

TEST(Factorize, InvertsMultiplication) {
  PolyRing r(5);
  IrreducibleTable t(r, 3);
  const auto primes = t.up_to(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poly f{1};
    std::map<Poly, unsigned> expect;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      const auto& p = primes[rng() % primes.size()];
      f = r.mul(f, p);
      ++expect[p];
    }
    Factorization fac = factorize(f, t);
    std::map<Poly, unsigned> got;
    Poly back = Poly::constant(fac.unit);
    for (const auto& [p, e] : fac.factors) {
      got[p] = e;
      back = r.mul(back, r.pow(p, e));
    }
    EXPECT_EQ(got, expect);
    EXPECT_EQ(back, f);
  }
}

TEST(Mobius, Examples) {
  PolyRing r(3);
  IrreducibleTable t(r, 3);
  EXPECT_EQ(mobius(r.make({0, 0, 1}), t), 0);
  EXPECT_EQ(mobius(r.mul(r.make({0, 1}), r.make({1, 1})), t), 1);
  EXPECT_EQ(mobius(r.make({0, 1}), t), -1);
  EXPECT_EQ(mobius(Poly{1}, t), 1);
}

TEST(EulerPhi, Examples) {
  PolyRing r(3);
  IrreducibleTable t(r, 3);
  EXPECT_EQ(euler_phi(r.make({0, 0, 1}), t), 6);
  EXPECT_EQ(euler_phi_by_count(r.make({0, 0, 1}), r), 6);
  EXPECT_EQ(euler_phi(Poly{1}, t), 1);
  EXPECT_EQ(euler_phi_by_count(Poly{1}, r), 1);
  BigInt sum = 0;
  for (const auto& f : r.monics(1)) sum += euler_phi(f, t);
  EXPECT_EQ(sum, 6);
}

TEST(EulerPhi, ProductFormulaMatchesCount) {
  for (std::uint32_t q : {3u, 5u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 3);
    for (unsigned n = 1; n <= (q == 3 ? 4u : 3u); ++n)
      for (const auto& f : r.monics(n)) EXPECT_EQ(euler_phi(f, t), euler_phi_by_count(f, r)) << to_string(f);
  }
}

// sum_{deg f = n} Phi(f) = q^{2n} (1 - 1/q)
TEST(EulerPhi, SumOverDegree) {
  for (std::uint32_t q : {3u, 5u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 4);
    for (unsigned n = 1; n <= 4; ++n) {
      BigInt sum = 0;
      for (const auto& f : r.monics(n)) sum += euler_phi(f, t);
      const BigInt q2n = BigInt(static_cast<unsigned long>(checked_pow(q, 2 * n)));
      EXPECT_EQ(sum, q2n - q2n / q) << q << " " << n;
    }
  }
}

// sum_{deg f = n} mu(f)^2 = q^n - q^{n-1} for n >= 2
TEST(Mobius, SquareFreeCount) {
  for (std::uint32_t q : {3u, 5u}) {
    PolyRing r(q);
    IrreducibleTable t(r, 3);
    for (unsigned n = 2; n <= 6; ++n) {
      std::uint64_t by_mu = 0, by_gcd = 0;
      for (const auto& f : r.monics(n)) {
        by_mu += mobius(f, t) != 0;
        by_gcd += r.is_squarefree(f);
      }
      EXPECT_EQ(by_mu, checked_pow(q, n) - checked_pow(q, n - 1));
      EXPECT_EQ(by_gcd, by_mu);
    }
  }
}
