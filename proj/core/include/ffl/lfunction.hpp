#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffl/characters.hpp"
#include "ffl/poly.hpp"
#include "ffl/sqrtq.hpp"

namespace ffl {

class CharacterSumEngine;

/// Integer polynomial sum_n A(n) u^n attached to chi_D.
///
/// For square-free monic D: lambda = 1 iff deg D is even (trivial zero at
/// u = 1), and the completed polynomial L* = L / (1-u)^lambda has degree
/// 2*delta = deg D - 1 - lambda, A*(0) = 1 and A*(2 delta) = q^delta. For
/// odd deg D = 2g+1 we have L* = L, delta = g, and the coefficients obey
/// a_n = a_{2g-n} q^{n-g}.
struct LPolynomial {
  std::uint32_t q = 0;
  Poly D;
  std::vector<BigInt> coeffs;
  unsigned lambda = 0;
  unsigned delta = 0;

  /// Highest index with a nonzero coefficient; -1 if all are zero.
  int degree() const;
  const BigInt& operator[](std::size_t n) const { return coeffs.at(n); }

  /// A bare coefficient vector with delta = (size-1)/2, for diagnostics on
  /// polynomials that did not come from a D.
  static LPolynomial synthetic(std::uint32_t q, std::vector<BigInt> coeffs);
};

/// A_D(n) = sum over monic f of degree n of chi_D(f). Naive: q^n Jacobi
/// symbols. This is the reference every faster path is checked against.
BigInt coefficient(const Poly& D, unsigned n, const PolyRing& ring);

/// A_D(0..nmax) by the naive sum. Any nonzero D (square-free or not).
std::vector<BigInt> character_sum_coefficients(const Poly& D, unsigned nmax, const PolyRing& ring);

/// L(u, chi_D) for square-free monic non-square D of positive degree: the
/// coefficients A_D(0..deg D - 1), with lambda and delta filled in. Throws
/// std::domain_error for squares, non-monic, non-square-free or constant D.
LPolynomial l_polynomial(const Poly& D, const PolyRing& ring);
/// Same, with coefficients from the Euler-product engine.
LPolynomial l_polynomial(const Poly& D, const CharacterSumEngine& engine);

/// L* = L / (1-u)^lambda. Identity for odd-degree D.
LPolynomial completed(const LPolynomial& L);

/// Exact test of a_n = a_{2 delta - n} q^{n - delta} for n = 0..2 delta,
/// with every coefficient past 2 delta required to vanish.
bool check_functional_equation(const LPolynomial& L);

/// L(q^{-1/2}) = a + b sqrt(q) with a = sum_{n even} A(n) q^{-n/2},
/// b = sum_{n odd} A(n) q^{-(n+1)/2}.
SqrtQRational evaluate_center(const LPolynomial& L);

/// Central value from the two short sums
///   sum_{n<=g} A(n) q^{-n/2} + sum_{m<=g-1} A(m) q^{-m/2},
/// which needs only A(0..g). Exact identity for D in H_{2g+1,q}.
SqrtQRational approx_fe_value(const Poly& D, const PolyRing& ring);
SqrtQRational approx_fe_value(const Poly& D, const CharacterSumEngine& engine);
/// From already computed low coefficients A(0..g) (size g+1).
template <class Int>
SqrtQRational approx_fe_from_low(std::uint32_t q, std::span<const Int> low);

struct RhCheck {
  bool pass = true;
  /// max over roots of ||u| - q^{-1/2}| / q^{-1/2}
  double max_deviation = 0.0;
  std::vector<double> root_moduli;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floating-point diagnostic that all roots of L* lie on |u| = q^{-1/2}.
/// Roots are found per square-free factor (exact Yun decomposition first)
/// so repeated Frobenius eigenvalues do not cost precision. Throws
/// NumericError if the eigenvalue solver fails.
RhCheck rh_root_check(const LPolynomial& L, double tol);

// --- implementation ----------------------------------------------------------

template <class Int>
SqrtQRational approx_fe_from_low(std::uint32_t q, std::span<const Int> low) {
  if (low.empty()) throw std::invalid_argument("approx_fe_from_low needs A(0..g)");
  const std::size_t g = low.size() - 1;
  SqrtQRational v(q);
  for (std::size_t n = 0; n <= g; ++n) {
    BigInt weight = (n < g) ? 2 : 1;  // A(n) appears in both sums for n <= g-1
    BigInt c;
    if constexpr (std::is_same_v<Int, BigInt>) c = low[n];
    else c = static_cast<long>(low[n]);
    v += SqrtQRational::inverse_sqrt_power(q, static_cast<unsigned>(n)) * Rational(c * weight);
  }
  return v;
}

}  // namespace ffl
