#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ffl/irreducible.hpp"
#include "ffl/sqrtq.hpp"

namespace ffl {

/// ~100 significant decimal digits; used for all Euler-product constants.
using HighPrec = boost::multiprecision::cpp_bin_float_100;

HighPrec to_high_prec(const Rational& r);
HighPrec to_high_prec(const BigInt& z);

/// zeta_A(s) = 1/(1 - q^{1-s}) for integer s (exact). Throws
/// std::domain_error at the pole s = 1 and for non-integer s, where
/// q^{1-s} is irrational.
Rational zeta_A(std::uint32_t q, const Rational& s);

/// Truncations of P(s) = prod_P (1 - 1/((|P|+1)|P|^s)) and of
/// sum_P deg P / (|P|(|P|+1) - 1) over irreducibles of degree <= cutoff.
///
/// Both depend on P only through deg P, so they are evaluated degree by
/// degree with the Gauss counts pi_q(d). Truncation errors:
///   |P1(inf) - P1(N)|           <= 2 q^{-N} / N        (tail_bound)
///   |logderiv(inf) - logderiv(N)| <= q^{-N} / (q - 1)  (logderiv_tail_bound)
/// from pi_q(d) <= q^d/d and 1/(|P|(|P|+1)) <= q^{-2d}.
struct EulerConstants {
  std::uint32_t q = 0;
  unsigned cutoff = 0;
  HighPrec P1;
  HighPrec logderiv;
  HighPrec tail_bound;
  HighPrec logderiv_tail_bound;
};

/// Throws std::invalid_argument for cutoff < 1.
EulerConstants euler_constants(std::uint32_t q, unsigned cutoff);

/// The truncated product at a real point s (test oracle for P'(1)/P(1)).
HighPrec euler_product_at(std::uint32_t q, unsigned cutoff, const HighPrec& s);

/// (1/log q) P'(1)/P(1) by a central difference of log P on the truncated
/// product. Test oracle for the prime-sum logderiv.
HighPrec logderiv_by_differentiation(std::uint32_t q, unsigned cutoff, const HighPrec& step);

/// Degree-1 block of P(1) as an exact rational: (1 - 1/((q+1) q))^q.
Rational degree_one_block(std::uint32_t q);

/// prod_{P|l} (1+|P|^{-1})^{-1} against the divisor sum
/// sum_{d|l} mu(d) prod_{P|d} 1/(|P|+1), both exact.
struct RationalIdentity {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};
RationalIdentity divisor_product_identity(const Poly& l, const IrreducibleTable& table);

/// For even n: sum_{deg l = n/2} prod_{P|l} (1+|P|^{-1})^{-1}
/// against q^{n/2} sum_{deg d <= n/2} mu(d)/|d| prod_{P|d} 1/(|P|+1).
RationalIdentity square_degree_identity(unsigned n, const IrreducibleTable& table);

/// Partial sums over monic d with deg d <= max_degree of
///   mu(d)/|d| prod_{P|d} 1/(|P|+1)          (-> P(1))
///   deg(d) mu(d)/|d| prod_{P|d} 1/(|P|+1)   (-> -P(1) logderiv)
/// with the tails bounded by sum_{h>M} q^{-h} and sum_{h>M} h q^{-h}.
struct DivisorSeries {
  Rational plain;
  Rational degree_weighted;
  HighPrec plain_tail;
  HighPrec weighted_tail;
};
DivisorSeries divisor_series(unsigned max_degree, const IrreducibleTable& table);

/// (P(1)/zeta_A(2)) |D| {([g/2]+1) + logderiv}, |D| = q^{2g+1}.
HighPrec first_sum_main_term(unsigned g, const EulerConstants& c);

/// First-moment main term (P(1)/(2 zeta_A(2))) |D| {(2g+1) + 1 + 4 logderiv}
/// and the two main terms it is assembled from.
struct MomentMainTerm {
  HighPrec value;
  HighPrec first_sum_term;  // first-sum form with [g/2]
  HighPrec dual_sum_term;   // first-sum form with [(g-1)/2]
};
MomentMainTerm moment_main_term(unsigned g, const EulerConstants& c);

/// The bracketed integer parts of the two sums recombine into the full main term:
/// 2(([g/2]+1) + ([(g-1)/2]+1)) == (2g+1) + 1 and 2(1 + 1) == 4.
bool main_term_brackets_consistent(unsigned g);

/// (1/2) P(1) (2g+1).
HighPrec mean_leading_term(unsigned g, const EulerConstants& c);

/// int_{USp(2g)} det(I - A)^s dA
///   = 2^{2gs} prod_{j=1}^{g} Gamma(1+g+j) Gamma(1/2+s+j) / (Gamma(1/2+j) Gamma(1+s+g+j)),
/// exact for integer s >= 0 where the Gamma ratios are finite products.
Rational symplectic_moment(unsigned g, unsigned s);

}  // namespace ffl
