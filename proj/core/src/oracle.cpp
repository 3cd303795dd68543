#include "ffl/oracle.hpp"

#include <stdexcept>
#include <string>

namespace ffl {

BigInt count_points(const Poly& D, const ExtField& field) {
  if (D.degree() < 1 || D.degree() % 2 == 0)
    throw std::domain_error("point counting assumes an odd-degree model");
  BigInt total = 1;  // point at infinity
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const auto x = field.from_index(i);
    total += 1 + field.quadratic_character(field.evaluate(D, x));
  }
  return total;
}

BigInt count_points(const Poly& D, unsigned n, const PolyRing& ring) {
  return count_points(D, ExtField(ring.field(), n));
}

BigInt count_points_in_subfield(const Poly& D, const ExtField& field, unsigned m) {
  if (m == 0 || field.degree() % m != 0) throw std::invalid_argument("subfield degree must divide n");
  if (D.degree() < 1 || D.degree() % 2 == 0)
    throw std::domain_error("point counting assumes an odd-degree model");
  const std::uint64_t qm = checked_pow(field.base().q(), m);
  BigInt total = 1;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    const auto x = field.from_index(i);
    if (field.pow(x, qm) != x) continue;
    const auto v = field.evaluate(D, x);
    if (field.is_zero(v)) {
      total += 1;
    } else if (field.pow(v, (qm - 1) / 2) == field.one()) {
      total += 2;
    }
  }
  return total;
}

PowerSums power_sums(const Poly& D, const PolyRing& ring) {
  const unsigned g = static_cast<unsigned>(D.degree() - 1) / 2;
  PowerSums ps;
  for (unsigned n = 1; n <= g; ++n) {
    BigInt N = count_points(D, n, ring);
    BigInt qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), ring.q(), n);
    ps.S.push_back(N - qn - 1);
    ps.N.push_back(std::move(N));
  }
  return ps;
}

LPolynomial zeta_numerator(const Poly& D, const PolyRing& ring) {
  if (D.degree() < 3 || D.degree() % 2 == 0 || !D.is_monic())
    throw std::domain_error("zeta numerator needs monic D of odd degree >= 3");
  const unsigned g = static_cast<unsigned>(D.degree() - 1) / 2;
  const auto ps = power_sums(D, ring);

  // P(u) = prod (1 - alpha_j u), p_k = sum alpha_j^k = -S_k.
  // Newton: k a_k = -sum_{i=1}^{k} p_i a_{k-i}.
  std::vector<Rational> a(g + 1);
  a[0] = 1;
  for (unsigned k = 1; k <= g; ++k) {
    Rational s = 0;
    for (unsigned i = 1; i <= k; ++i) s += Rational(-ps.S[i - 1]) * a[k - i];
    a[k] = -s / k;
    a[k].canonicalize();
    if (a[k].get_den() != 1)
      throw std::logic_error("Newton recursion produced non-integer a_" + std::to_string(k) + " = " +
                             a[k].get_str() + " for D = " + to_string(D));
  }

  LPolynomial L;
  L.q = ring.q();
  L.D = D;
  L.delta = g;
  L.coeffs.resize(2 * g + 1);
  for (unsigned n = 0; n <= g; ++n) L.coeffs[n] = a[n].get_num();
  // a_{2g-n} = a_n q^{g-n}
  for (unsigned n = 0; n < g; ++n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), ring.q(), g - n);
    L.coeffs[2 * g - n] = L.coeffs[n] * p;
  }
  return L;
}

bool oracle_compare(const Poly& D, const LPolynomial& from_characters, const PolyRing& ring) {
  const auto oracle = zeta_numerator(D, ring);
  return oracle.coeffs == from_characters.coeffs;
}

bool oracle_compare(const Poly& D, const PolyRing& ring) {
  return oracle_compare(D, l_polynomial(D, ring), ring);
}

}  // namespace ffl
