#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ffl {

using Coeff = std::uint32_t;

/// The prime field F_q, q an odd prime below 2^16.
///
/// Holds small lookup tables (inverses, quadratic character) so scalar
/// arithmetic in the hot loops is a table read or one modular product.
/// Immutable after construction; share freely across threads.
class FieldSpec {
public:
  /// Throws std::invalid_argument unless q is an odd prime in [3, 65536).
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }
  /// 1 or 3.
  std::uint32_t residue_class_mod_4() const noexcept { return q_ % 4; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  /// Throws std::domain_error on a == 0.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Reduces an arbitrary signed integer into [0, q).
  Coeff reduce(std::int64_t v) const noexcept;

  /// a^{(q-1)/2} mapped to {-1, 0, +1}.
  int legendre(Coeff a) const noexcept { return legendre_[a]; }

private:
  std::uint32_t q_;
  std::vector<Coeff> inverse_;
  std::vector<std::int8_t> legendre_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Thin value wrapper pairing a residue with its field, for callers that
/// want operator syntax. Scans use the raw FieldSpec methods instead.
class FieldElement {
public:
  FieldElement(const FieldSpec& field, std::int64_t value)
      : field_(&field), value_(field.reduce(value)) {}

  Coeff value() const noexcept { return value_; }
  const FieldSpec& field() const noexcept { return *field_; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {*a.field_, a.field_->add(a.value_, b.value_), Raw{}};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {*a.field_, a.field_->sub(a.value_, b.value_), Raw{}};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {*a.field_, a.field_->mul(a.value_, b.value_), Raw{}};
  }
  FieldElement inv() const { return {*field_, field_->inv(value_), Raw{}}; }
  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e), Raw{}}; }
  int legendre() const noexcept { return field_->legendre(value_); }

  friend bool operator==(FieldElement a, FieldElement b) noexcept { return a.value_ == b.value_; }

private:
  struct Raw {};
  FieldElement(const FieldSpec& field, Coeff v, Raw) : field_(&field), value_(v) {}

  const FieldSpec* field_;
  Coeff value_;
};

class Poly;

/// F_{q^n} = F_q[t]/(modulus). Elements are residue vectors of length n,
/// constant term first. Elements are also addressable by an index in
/// [0, q^n) (base-q digits, constant digit least significant), which is
/// how point counting iterates the field.
class ExtField {
public:
  using Element = std::vector<Coeff>;

  /// Uses the lexicographically smallest monic irreducible of degree n.
  ExtField(const FieldSpec& base, unsigned n);
  /// Throws std::invalid_argument if the modulus is not monic irreducible.
  ExtField(const FieldSpec& base, const Poly& modulus);

  const FieldSpec& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Modulus coefficients, constant term first, leading 1 included.
  std::span<const Coeff> modulus() const noexcept { return modulus_; }

  Element zero() const { return Element(n_, 0); }
  Element one() const;
  Element embed(Coeff a) const;
  Element from_index(std::uint64_t index) const;
  std::uint64_t to_index(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;

  /// a^{(q^n-1)/2} mapped to {-1, 0, +1}.
  int quadratic_character(const Element& a) const;

  /// Horner evaluation of a polynomial over F_q at a point of F_{q^n}.
  Element evaluate(const Poly& f, const Element& x) const;

private:
  void check_modulus() const;

  FieldSpec base_;
  unsigned n_;
  std::uint64_t order_;
  std::vector<Coeff> modulus_;
};

}  // namespace ffl
