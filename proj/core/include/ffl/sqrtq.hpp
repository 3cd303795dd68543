#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ffl {

using Rational = mpq_class;

/// Exact element a + b*sqrt(q) of Q(sqrt q), q a prime. Since sqrt(q) is
/// irrational the pair (a, b) is unique, so equality is exact.
class SqrtQRational {
public:
  SqrtQRational() = default;
  explicit SqrtQRational(std::uint32_t q) : q_(q) {}
  SqrtQRational(std::uint32_t q, Rational a, Rational b);

  std::uint32_t q() const noexcept { return q_; }
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// q^{-n/2} as an element of Q(sqrt q).
  static SqrtQRational inverse_sqrt_power(std::uint32_t q, unsigned n);

  SqrtQRational& operator+=(const SqrtQRational& o);
  SqrtQRational& operator-=(const SqrtQRational& o);
  SqrtQRational& operator*=(const SqrtQRational& o);
  SqrtQRational& operator*=(const Rational& r);
  SqrtQRational& operator/=(const Rational& r);

  friend SqrtQRational operator+(SqrtQRational x, const SqrtQRational& y) { return x += y; }
  friend SqrtQRational operator-(SqrtQRational x, const SqrtQRational& y) { return x -= y; }
  friend SqrtQRational operator*(SqrtQRational x, const SqrtQRational& y) { return x *= y; }
  friend SqrtQRational operator*(SqrtQRational x, const Rational& r) { return x *= r; }
  friend SqrtQRational operator/(SqrtQRational x, const Rational& r) { return x /= r; }
  friend bool operator==(const SqrtQRational& x, const SqrtQRational& y);

  /// Sign of a + b sqrt(q), decided exactly.
  int sign() const;
  /// |x| <= |y| decided exactly.
  friend bool abs_le(const SqrtQRational& x, const SqrtQRational& y);

  double to_double() const;
  /// "a + b*sqrt(q)" with both parts as reduced fractions.
  std::string to_string() const;

private:
  void adopt_q(const SqrtQRational& o);

  std::uint32_t q_ = 0;  // 0 = untagged zero, adopts the other operand's q
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace ffl
