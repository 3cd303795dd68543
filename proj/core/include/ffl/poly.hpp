#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "ffl/field.hpp"

namespace ffl {

using BigInt = mpz_class;

/// Dense polynomial over F_q, constant term first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero. A Poly
/// does not know its field: coefficients are assumed reduced, and all
/// arithmetic goes through a PolyRing.
class Poly {
public:
  using Storage = boost::container::small_vector<Coeff, 16>;

  Poly() = default;
  /// Coefficients must already lie in [0, q). Trailing zeros are trimmed.
  Poly(std::initializer_list<Coeff> coeffs);
  explicit Poly(std::span<const Coeff> coeffs);
  explicit Poly(Storage coeffs);

  static Poly constant(Coeff c);
  /// c * x^k
  static Poly monomial(Coeff c, unsigned k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Coeff leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  /// Coefficient of x^i; zero past the degree.
  Coeff operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::span<const Coeff> coeffs() const noexcept { return {c_.data(), c_.size()}; }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

private:
  friend class PolyRing;
  void trim() noexcept;
  Storage c_;
};

/// "[c0,c1,...,1]", little-endian by degree.
std::string to_coeff_list(const Poly& f);
/// Human-readable form, e.g. "x^3 + 2*x + 1".
std::string to_string(const Poly& f);

/// The ring A = F_q[x].
class PolyRing {
public:
  explicit PolyRing(std::uint32_t q) : field_(q) {}
  explicit PolyRing(FieldSpec field) : field_(std::move(field)) {}

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.q(); }

  /// Reduces integer coefficients (constant term first) mod q.
  Poly make(std::initializer_list<std::int64_t> coeffs) const;
  Poly make(std::span<const std::int64_t> coeffs) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly scale(const Poly& a, Coeff c) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly pow(const Poly& a, unsigned e) const;

  /// Throws std::domain_error when b is zero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly rem(const Poly& a, const Poly& b) const;
  Poly quot(const Poly& a, const Poly& b) const;
  bool divides(const Poly& d, const Poly& f) const;

  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(const Poly& a, const Poly& b) const;
  Poly derivative(const Poly& f) const;
  /// Scales to leading coefficient 1; zero maps to zero.
  Poly monic(const Poly& f) const;
  Coeff eval(const Poly& f, Coeff x) const;
  /// base^e mod m, m nonzero.
  Poly pow_mod(const Poly& base, const BigInt& e, const Poly& m) const;

  /// True iff gcd(f, f') is a nonzero constant. Throws std::domain_error on
  /// zero. A nonconstant f with f' = 0 is a p-th power and not square-free.
  bool is_squarefree(const Poly& f) const;
  /// A square root of f if f = h^2 for some h in F_q[x].
  std::optional<Poly> sqrt(const Poly& f) const;
  bool is_square(const Poly& f) const { return sqrt(f).has_value(); }

  /// |f| = q^deg f, |0| = 0.
  BigInt norm(const Poly& f) const;

  /// q^n, the number of monic polynomials of degree n.
  std::uint64_t monic_count(unsigned n) const;
  /// Monic polynomial of degree n whose lower coefficients are the base-q
  /// digits of index (constant digit least significant).
  Poly monic_from_index(unsigned n, std::uint64_t index) const;
  /// Inverse of monic_from_index for monic f.
  std::uint64_t index_of(const Poly& f) const;
  /// Index of an arbitrary polynomial of degree < n as a residue vector.
  std::uint64_t residue_index(const Poly& f) const;

  class MonicRange;
  /// All q^n monic polynomials of degree n in lexicographic order with the
  /// constant term varying fastest.
  MonicRange monics(unsigned n) const;

private:
  FieldSpec field_;
};

class PolyRing::MonicRange {
public:
  class iterator {
  public:
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Poly& operator*() const noexcept { return current_; }
    const Poly* operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.remaining_ == b.remaining_;
    }

  private:
    friend class MonicRange;
    iterator(std::uint32_t q, Poly first, std::uint64_t remaining)
        : q_(q), current_(std::move(first)), remaining_(remaining) {}

    std::uint32_t q_ = 0;
    Poly current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const;
  iterator end() const { return {}; }
  std::uint64_t size() const noexcept { return count_; }

private:
  friend class PolyRing;
  MonicRange(std::uint32_t q, unsigned n, std::uint64_t count) : q_(q), n_(n), count_(count) {}
  std::uint32_t q_;
  unsigned n_;
  std::uint64_t count_;
};

/// Lexicographically smallest monic irreducible of degree n (first hit in
/// monics(n) order). Deterministic for fixed (q, n).
Poly find_irreducible(const PolyRing& ring, unsigned n);

/// Integer power with overflow check (throws std::overflow_error).
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace ffl
