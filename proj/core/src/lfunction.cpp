#include "ffl/lfunction.hpp"

#include <stdexcept>

#include "ffl/char_engine.hpp"

namespace ffl {

int LPolynomial::degree() const {
  for (std::size_t n = coeffs.size(); n-- > 0;)
    if (coeffs[n] != 0) return static_cast<int>(n);
  return -1;
}

LPolynomial LPolynomial::synthetic(std::uint32_t q, std::vector<BigInt> coeffs) {
  LPolynomial L;
  L.q = q;
  L.delta = coeffs.empty() ? 0 : static_cast<unsigned>((coeffs.size() - 1) / 2);
  L.coeffs = std::move(coeffs);
  return L;
}

BigInt coefficient(const Poly& D, unsigned n, const PolyRing& ring) {
  long sum = 0;
  for (const auto& f : ring.monics(n)) sum += jacobi(D, f, ring);
  return BigInt(sum);
}

std::vector<BigInt> character_sum_coefficients(const Poly& D, unsigned nmax, const PolyRing& ring) {
  if (D.is_zero()) throw std::domain_error("character sums need a nonzero D");
  std::vector<BigInt> a;
  a.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) a.push_back(coefficient(D, n, ring));
  return a;
}

namespace {

void validate_discriminant(const Poly& D, const PolyRing& ring) {
  if (D.degree() < 1 || !D.is_monic())
    throw std::domain_error("L-polynomial needs a monic D of positive degree");
  if (ring.is_square(D)) throw std::domain_error("D = " + to_string(D) + " is a perfect square");
  if (!ring.is_squarefree(D)) throw std::domain_error("D = " + to_string(D) + " is not square-free");
}

LPolynomial with_metadata(const Poly& D, std::uint32_t q, std::vector<BigInt> coeffs) {
  LPolynomial L;
  L.q = q;
  L.D = D;
  L.coeffs = std::move(coeffs);
  L.lambda = D.degree() % 2 == 0 ? 1 : 0;
  L.delta = static_cast<unsigned>(D.degree() - 1 - static_cast<int>(L.lambda)) / 2;
  return L;
}

}  // namespace

LPolynomial l_polynomial(const Poly& D, const PolyRing& ring) {
  validate_discriminant(D, ring);
  return with_metadata(D, ring.q(), character_sum_coefficients(D, static_cast<unsigned>(D.degree() - 1), ring));
}

LPolynomial l_polynomial(const Poly& D, const CharacterSumEngine& engine) {
  const auto& ring = engine.ring();
  validate_discriminant(D, ring);
  std::vector<std::int64_t> a(static_cast<std::size_t>(D.degree()));
  engine.coefficients(D, a);
  std::vector<BigInt> coeffs(a.begin(), a.end());
  return with_metadata(D, ring.q(), std::move(coeffs));
}

LPolynomial completed(const LPolynomial& L) {
  if (L.lambda == 0) return L;
  // Synthetic division by (1 - u): b_n = a_n + b_{n-1}.
  LPolynomial out = L;
  std::vector<BigInt> b(L.coeffs.size() > 0 ? L.coeffs.size() - 1 : 0);
  BigInt running = 0;
  for (std::size_t n = 0; n < b.size(); ++n) {
    running += L.coeffs[n];
    b[n] = running;
  }
  running += L.coeffs.empty() ? BigInt(0) : L.coeffs.back();
  if (running != 0) throw std::domain_error("L(u) has no trivial zero at u = 1");
  out.coeffs = std::move(b);
  return out;
}

bool check_functional_equation(const LPolynomial& L) {
  const std::size_t top = 2 * static_cast<std::size_t>(L.delta);
  const auto& a = L.coeffs;
  if (a.empty()) return true;
  for (std::size_t n = top + 1; n < a.size(); ++n)
    if (a[n] != 0) return false;
  auto at = [&](std::size_t n) { return n < a.size() ? a[n] : BigInt(0); };
  BigInt qg, qn;
  mpz_ui_pow_ui(qg.get_mpz_t(), L.q, L.delta);
  for (std::size_t n = 0; n <= top; ++n) {
    mpz_ui_pow_ui(qn.get_mpz_t(), L.q, n);
    // a_n q^g == a_{2g-n} q^n
    if (at(n) * qg != at(top - n) * qn) return false;
  }
  return true;
}

SqrtQRational evaluate_center(const LPolynomial& L) {
  SqrtQRational v(L.q);
  for (std::size_t n = 0; n < L.coeffs.size(); ++n) {
    if (L.coeffs[n] == 0) continue;
    v += SqrtQRational::inverse_sqrt_power(L.q, static_cast<unsigned>(n)) * Rational(L.coeffs[n]);
  }
  return v;
}

namespace {

unsigned genus_of(const Poly& D) {
  if (D.degree() < 1 || D.degree() % 2 == 0)
    throw std::domain_error("approximate functional equation needs deg D = 2g+1");
  return static_cast<unsigned>(D.degree() - 1) / 2;
}

}  // namespace

SqrtQRational approx_fe_value(const Poly& D, const PolyRing& ring) {
  const unsigned g = genus_of(D);
  auto low = character_sum_coefficients(D, g, ring);
  return approx_fe_from_low<BigInt>(ring.q(), low);
}

SqrtQRational approx_fe_value(const Poly& D, const CharacterSumEngine& engine) {
  const unsigned g = genus_of(D);
  std::vector<std::int64_t> low(g + 1);
  engine.coefficients(D, low);
  return approx_fe_from_low<std::int64_t>(engine.ring().q(), low);
}

}  // namespace ffl
