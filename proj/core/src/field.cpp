#include "ffl/field.hpp"

#include <stdexcept>
#include <string>

#include "ffl/poly.hpp"

namespace ffl {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q < 3 || q >= 65536 || !is_prime(q))
    throw std::invalid_argument("field order must be an odd prime below 65536, got " +
                                std::to_string(q));
  inverse_.assign(q, 0);
  for (Coeff a = 1; a < q; ++a) inverse_[a] = pow(a, q - 2);
  legendre_.assign(q, -1);
  legendre_[0] = 0;
  for (Coeff a = 1; a < q; ++a) legendre_[mul(a, a)] = 1;
}

Coeff FieldSpec::inv(Coeff a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_q");
  return inverse_[a];
}

Coeff FieldSpec::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1;
  Coeff base = a % q_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff FieldSpec::reduce(std::int64_t v) const noexcept {
  auto r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Coeff>(r);
}

// --- ExtField --------------------------------------------------------------

namespace {

Poly smallest_irreducible(const PolyRing& ring, unsigned n);

}  // namespace

ExtField::ExtField(const FieldSpec& base, unsigned n) : base_(base), n_(n) {
  if (n == 0) throw std::invalid_argument("extension degree must be at least 1");
  PolyRing ring(base_);
  auto m = smallest_irreducible(ring, n);
  modulus_.assign(m.coeffs().begin(), m.coeffs().end());
  order_ = checked_pow(base_.q(), n);
}

ExtField::ExtField(const FieldSpec& base, const Poly& modulus)
    : base_(base), n_(static_cast<unsigned>(std::max(modulus.degree(), 0))) {
  if (modulus.degree() < 1 || !modulus.is_monic())
    throw std::invalid_argument("extension modulus must be monic of degree >= 1");
  modulus_.assign(modulus.coeffs().begin(), modulus.coeffs().end());
  order_ = checked_pow(base_.q(), n_);
  check_modulus();
}

void ExtField::check_modulus() const {
  // Irreducible iff no monic factor of degree <= n/2.
  PolyRing ring(base_);
  Poly m{std::span<const Coeff>(modulus_)};
  for (unsigned d = 1; 2 * d <= n_; ++d)
    for (const auto& f : ring.monics(d))
      if (ring.divides(f, m))
        throw std::invalid_argument("extension modulus " + to_string(m) + " is reducible");
}

ExtField::Element ExtField::one() const {
  Element e(n_, 0);
  e[0] = 1;
  return e;
}

ExtField::Element ExtField::embed(Coeff a) const {
  Element e(n_, 0);
  e[0] = a % base_.q();
  return e;
}

ExtField::Element ExtField::from_index(std::uint64_t index) const {
  Element e(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    e[i] = static_cast<Coeff>(index % base_.q());
    index /= base_.q();
  }
  return e;
}

std::uint64_t ExtField::to_index(const Element& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = n_; i-- > 0;) idx = idx * base_.q() + a[i];
  return idx;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
  Element r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
  Element r(n_);
  for (unsigned i = 0; i < n_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
  std::vector<Coeff> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  // modulus is monic: t^n = -(m_0 + ... + m_{n-1} t^{n-1})
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    Coeff c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < n_; ++i)
      prod[k - n_ + i] = base_.sub(prod[k - n_ + i], base_.mul(c, modulus_[i]));
  }
  prod.resize(n_);
  return prod;
}

ExtField::Element ExtField::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool ExtField::is_zero(const Element& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

ExtField::Element ExtField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_{q^n}");
  return pow(a, order_ - 2);
}

int ExtField::quadratic_character(const Element& a) const {
  if (is_zero(a)) return 0;
  auto r = pow(a, (order_ - 1) / 2);
  return r == one() ? 1 : -1;
}

ExtField::Element ExtField::evaluate(const Poly& f, const Element& x) const {
  Element acc = zero();
  for (int i = f.degree(); i >= 0; --i) acc = add(mul(acc, x), embed(f[static_cast<std::size_t>(i)]));
  return acc;
}

namespace {

Poly smallest_irreducible(const PolyRing& ring, unsigned n) {
  for (const auto& f : ring.monics(n)) {
    bool irreducible = true;
    for (unsigned d = 1; irreducible && 2 * d <= n; ++d)
      for (const auto& g : ring.monics(d))
        if (ring.divides(g, f)) {
          irreducible = false;
          break;
        }
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Poly find_irreducible(const PolyRing& ring, unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be at least 1");
  return smallest_irreducible(ring, n);
}

}  // namespace ffl
