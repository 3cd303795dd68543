#include "ffl/asymptotics.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ffl {

HighPrec to_high_prec(const BigInt& z) { return HighPrec(z.get_str()); }

HighPrec to_high_prec(const Rational& r) {
  return to_high_prec(BigInt(r.get_num())) / to_high_prec(BigInt(r.get_den()));
}

namespace {

BigInt ipow(std::uint32_t q, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

Rational qpow(std::uint32_t q, long e) {
  Rational r = e >= 0 ? Rational(ipow(q, static_cast<unsigned>(e))) : Rational(BigInt(1), ipow(q, static_cast<unsigned>(-e)));
  r.canonicalize();
  return r;
}

}  // namespace

Rational zeta_A(std::uint32_t q, const Rational& s) {
  Rational t = s;
  t.canonicalize();
  if (t.get_den() != 1) throw std::domain_error("zeta_A is only exact at integer s");
  if (t == 1) throw std::domain_error("zeta_A has a pole at s = 1");
  const long e = 1 - t.get_num().get_si();
  Rational r = 1 / (Rational(1) - qpow(q, e));
  r.canonicalize();
  return r;
}

EulerConstants euler_constants(std::uint32_t q, unsigned cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Euler product cutoff must be >= 1");
  EulerConstants c;
  c.q = q;
  c.cutoff = cutoff;
  HighPrec log_p1 = 0;
  Rational logderiv = 0;
  for (unsigned d = 1; d <= cutoff; ++d) {
    const BigInt count = irreducible_count(q, d);
    const BigInt norm = ipow(q, d);
    // factor (1 - 1/((|P|+1)|P|)), exact, raised to pi_q(d) through logs
    const Rational x(BigInt(1), (norm + 1) * norm);
    log_p1 += to_high_prec(count) * boost::multiprecision::log1p(-to_high_prec(x));
    logderiv += Rational(count * d, norm * (norm + 1) - 1);
  }
  logderiv.canonicalize();
  c.P1 = boost::multiprecision::exp(log_p1);
  c.logderiv = to_high_prec(logderiv);
  const HighPrec qN = boost::multiprecision::pow(HighPrec(q), static_cast<int>(cutoff));
  c.tail_bound = 2 / (qN * cutoff);
  c.logderiv_tail_bound = 1 / (qN * (q - 1));
  return c;
}

HighPrec euler_product_at(std::uint32_t q, unsigned cutoff, const HighPrec& s) {
  HighPrec log_p = 0;
  for (unsigned d = 1; d <= cutoff; ++d) {
    const HighPrec norm = boost::multiprecision::pow(HighPrec(q), static_cast<int>(d));
    const HighPrec x = 1 / ((norm + 1) * boost::multiprecision::pow(norm, s));
    log_p += to_high_prec(irreducible_count(q, d)) * boost::multiprecision::log1p(-x);
  }
  return boost::multiprecision::exp(log_p);
}

HighPrec logderiv_by_differentiation(std::uint32_t q, unsigned cutoff, const HighPrec& step) {
  const HighPrec up = boost::multiprecision::log(euler_product_at(q, cutoff, 1 + step));
  const HighPrec down = boost::multiprecision::log(euler_product_at(q, cutoff, 1 - step));
  return (up - down) / (2 * step) / boost::multiprecision::log(HighPrec(q));
}

Rational degree_one_block(std::uint32_t q) {
  Rational factor = Rational(1) - Rational(BigInt(1), BigInt(q + 1) * q);
  factor.canonicalize();
  Rational r = 1;
  for (std::uint32_t i = 0; i < q; ++i) r *= factor;
  return r;
}

namespace {

// prod_{P | d} 1/(|P|+1) from a factorization.
Rational inverse_norm_plus_one(const Factorization& fac, const PolyRing& ring) {
  Rational r = 1;
  for (const auto& f : fac.factors) r /= Rational(ring.norm(f.prime) + 1);
  return r;
}

}  // namespace

RationalIdentity divisor_product_identity(const Poly& l, const IrreducibleTable& table) {
  const auto& ring = table.ring();
  if (!l.is_monic()) throw std::domain_error("divisor product identity needs monic l");
  const auto fac = factorize(l, table);
  RationalIdentity out;
  out.lhs = 1;
  for (const auto& f : fac.factors) {
    Rational np(ring.norm(f.prime));
    out.lhs *= np / (np + 1);  // (1 + 1/|P|)^{-1}
  }
  out.lhs.canonicalize();

  // Every monic divisor d = prod P^{e}, 0 <= e <= exponent.
  out.rhs = 0;
  std::vector<unsigned> exps(fac.factors.size(), 0);
  for (;;) {
    Poly d = Poly::constant(1);
    for (std::size_t i = 0; i < exps.size(); ++i) d = ring.mul(d, ring.pow(fac.factors[i].prime, exps[i]));
    const int mu = d.is_one() ? 1 : mobius(d, table);
    if (mu != 0) {
      const auto dfac = d.is_one() ? Factorization{} : factorize(d, table);
      out.rhs += mu * inverse_norm_plus_one(dfac, ring);
    }
    std::size_t i = 0;
    while (i < exps.size() && ++exps[i] > fac.factors[i].exponent) exps[i++] = 0;
    if (i == exps.size()) break;
  }
  out.rhs.canonicalize();
  return out;
}

RationalIdentity square_degree_identity(unsigned n, const IrreducibleTable& table) {
  if (n % 2 != 0) throw std::domain_error("square degree identity needs even n");
  const auto& ring = table.ring();
  const unsigned half = n / 2;
  RationalIdentity out;
  out.lhs = 0;
  for (const auto& l : ring.monics(half)) {
    Rational term = 1;
    if (!l.is_one())
      for (const auto& f : factorize(l, table).factors) {
        Rational np(ring.norm(f.prime));
        term *= np / (np + 1);
      }
    out.lhs += term;
  }
  Rational sum = 0;
  for (unsigned k = 0; k <= half; ++k)
    for (const auto& d : ring.monics(k)) {
      if (d.is_one()) {
        sum += 1;
        continue;
      }
      const auto fac = factorize(d, table);
      bool squarefree = true;
      for (const auto& f : fac.factors) squarefree &= f.exponent == 1;
      if (!squarefree) continue;
      const int mu = (fac.factors.size() % 2) ? -1 : 1;
      sum += mu * inverse_norm_plus_one(fac, ring) / Rational(ring.norm(d));
    }
  out.rhs = Rational(ipow(ring.q(), half)) * sum;
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  return out;
}

DivisorSeries divisor_series(unsigned max_degree, const IrreducibleTable& table) {
  const auto& ring = table.ring();
  DivisorSeries out;
  out.plain = 0;
  out.degree_weighted = 0;
  for (unsigned k = 0; k <= max_degree; ++k)
    for (const auto& d : ring.monics(k)) {
      if (d.is_one()) {
        out.plain += 1;
        continue;
      }
      const int mu = mobius(d, table);
      if (mu == 0) continue;
      const Rational term = mu * inverse_norm_plus_one(factorize(d, table), ring) / Rational(ring.norm(d));
      out.plain += term;
      out.degree_weighted += term * k;
    }
  out.plain.canonicalize();
  out.degree_weighted.canonicalize();
  // sum_{h>M} q^{-h} = q^{-M}/(q-1);  sum_{h>M} h q^{-h} = q^{-M}((M+1)(q-1)+1)/(q-1)^2
  const HighPrec q = ring.q();
  const HighPrec qM = boost::multiprecision::pow(q, static_cast<int>(max_degree));
  out.plain_tail = 1 / (qM * (q - 1));
  out.weighted_tail = ((max_degree + 1) * (q - 1) + 1) / (qM * (q - 1) * (q - 1));
  return out;
}

namespace {

HighPrec scale(unsigned g, const EulerConstants& c) {
  const HighPrec D = to_high_prec(ipow(c.q, 2 * g + 1));
  return c.P1 / to_high_prec(zeta_A(c.q, 2)) * D;
}

}  // namespace

HighPrec first_sum_main_term(unsigned g, const EulerConstants& c) {
  return scale(g, c) * (HighPrec(g / 2 + 1) + c.logderiv);
}

MomentMainTerm moment_main_term(unsigned g, const EulerConstants& c) {
  MomentMainTerm t;
  t.first_sum_term = first_sum_main_term(g, c);
  const unsigned dual_bracket = g == 0 ? 0 : (g - 1) / 2 + 1;
  t.dual_sum_term = scale(g, c) * (HighPrec(dual_bracket) + c.logderiv);
  t.value = scale(g, c) / 2 * (HighPrec(2 * g + 1) + 1 + 4 * c.logderiv);
  return t;
}

bool main_term_brackets_consistent(unsigned g) {
  if (g == 0) return false;
  const unsigned first = g / 2 + 1;
  const unsigned dual = (g - 1) / 2 + 1;
  return 2 * (first + dual) == (2 * g + 1) + 1 && 2 * (1 + 1) == 4;
}

HighPrec mean_leading_term(unsigned g, const EulerConstants& c) { return c.P1 * (2 * g + 1) / 2; }

Rational symplectic_moment(unsigned g, unsigned s) {
  // Gamma(1/2+s+j)/Gamma(1/2+j) = prod_{k<s} (1/2 + j + k)
  // Gamma(1+g+j)/Gamma(1+s+g+j) = 1 / prod_{k<s} (1 + g + j + k)
  Rational r = Rational(ipow(2, 2 * g * s));
  for (unsigned j = 1; j <= g; ++j)
    for (unsigned k = 0; k < s; ++k) {
      r *= Rational(2 * (j + k) + 1, 2);
      r /= Rational(1 + g + j + k);
    }
  r.canonicalize();
  return r;
}

}  // namespace ffl
