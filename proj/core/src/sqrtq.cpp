#include "ffl/sqrtq.hpp"

#include <cmath>
#include <stdexcept>

namespace ffl {

SqrtQRational::SqrtQRational(std::uint32_t q, Rational a, Rational b)
    : q_(q), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

SqrtQRational SqrtQRational::inverse_sqrt_power(std::uint32_t q, unsigned n) {
  // n even: q^{-n/2}; n odd: q^{-(n+1)/2} * sqrt(q)
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), q, (n + 1) / 2);
  Rational r(mpz_class(1), den);
  r.canonicalize();
  return n % 2 == 0 ? SqrtQRational(q, r, 0) : SqrtQRational(q, 0, r);
}

void SqrtQRational::adopt_q(const SqrtQRational& o) {
  if (q_ == 0) {
    q_ = o.q_;
  } else if (o.q_ != 0 && o.q_ != q_) {
    throw std::invalid_argument("mixing Q(sqrt q) values with different q");
  }
}

SqrtQRational& SqrtQRational::operator+=(const SqrtQRational& o) {
  adopt_q(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SqrtQRational& SqrtQRational::operator-=(const SqrtQRational& o) {
  adopt_q(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SqrtQRational& SqrtQRational::operator*=(const SqrtQRational& o) {
  adopt_q(o);
  Rational a = a_ * o.a_ + Rational(q_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

SqrtQRational& SqrtQRational::operator*=(const Rational& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

SqrtQRational& SqrtQRational::operator/=(const Rational& r) {
  if (r == 0) throw std::domain_error("division by zero");
  a_ /= r;
  b_ /= r;
  return *this;
}

bool operator==(const SqrtQRational& x, const SqrtQRational& y) {
  if (x.q_ != 0 && y.q_ != 0 && x.q_ != y.q_) return x.is_zero() && y.is_zero();
  return x.a_ == y.a_ && x.b_ == y.b_;
}

int SqrtQRational::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with q b^2
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(q_) * b_ * b_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for irrational sqrt(q) unless both zero
  return c > 0 ? sa : sb;
}

bool abs_le(const SqrtQRational& x, const SqrtQRational& y) {
  SqrtQRational ax = x.sign() < 0 ? SqrtQRational(x.q_, -x.a_, -x.b_) : x;
  SqrtQRational ay = y.sign() < 0 ? SqrtQRational(y.q_, -y.a_, -y.b_) : y;
  return (ay - ax).sign() >= 0;
}

double SqrtQRational::to_double() const {
  // mpf with headroom so huge numerators/denominators don't overflow double
  mpf_class a(a_, 256), b(b_, 256), s(q_, 256);
  s = ::sqrt(s);
  mpf_class v = a + b * s;
  return v.get_d();
}

std::string SqrtQRational::to_string() const {
  return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + std::to_string(q_) + ")";
}

}  // namespace ffl
