#include "ffl/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ffl {

// --- Poly -------------------------------------------------------------------

Poly::Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

Poly::Poly(std::span<const Coeff> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

Poly::Poly(Storage coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Coeff c) { return Poly{c}; }

Poly Poly::monomial(Coeff c, unsigned k) {
  if (c == 0) return {};
  Storage s(k + 1, 0);
  s[k] = c;
  return Poly(std::move(s));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = a.degree(); i >= 0; --i) {
    auto k = static_cast<std::size_t>(i);
    if (auto c = a.c_[k] <=> b.c_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_coeff_list(const Poly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.coeffs()[i]);
  }
  return s + "]";
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    Coeff c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

// --- PolyRing ----------------------------------------------------------------

Poly PolyRing::make(std::initializer_list<std::int64_t> coeffs) const {
  return make(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Poly PolyRing::make(std::span<const std::int64_t> coeffs) const {
  Poly::Storage s;
  s.reserve(coeffs.size());
  for (auto v : coeffs) s.push_back(field_.reduce(v));
  return Poly(std::move(s));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  Poly::Storage s(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = field_.add(a[i], b[i]);
  return Poly(std::move(s));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
  Poly::Storage s(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = field_.sub(a[i], b[i]);
  return Poly(std::move(s));
}

Poly PolyRing::neg(const Poly& a) const {
  Poly r = a;
  for (auto& c : r.c_) c = field_.neg(c);
  return r;
}

Poly PolyRing::scale(const Poly& a, Coeff c) const {
  if (c % q() == 0) return {};
  Poly r = a;
  for (auto& v : r.c_) v = field_.mul(v, c);
  return r;
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  // Accumulate in 64 bits and reduce once; safe while deg < 2^32 / q^2.
  boost::container::small_vector<std::uint64_t, 32> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j];
  }
  Poly::Storage s(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) s[k] = static_cast<Coeff>(acc[k] % q());
  return Poly(std::move(s));
}

Poly PolyRing::pow(const Poly& a, unsigned e) const {
  Poly r = Poly::constant(1);
  Poly base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  Poly::Storage r(a.c_.begin(), a.c_.end());
  const auto db = static_cast<std::size_t>(b.degree());
  Poly::Storage quo(r.size() - db, 0);
  const Coeff lead_inv = field_.inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    Coeff c = r[k];
    if (c == 0) continue;
    if (lead_inv != 1) c = field_.mul(c, lead_inv);
    quo[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i)
      r[k - db + i] = field_.sub(r[k - db + i], field_.mul(c, b.c_[i]));
  }
  r.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly PolyRing::rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

Poly PolyRing::quot(const Poly& a, const Poly& b) const { return divmod(a, b).first; }

bool PolyRing::divides(const Poly& d, const Poly& f) const { return rem(f, d).is_zero(); }

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly PolyRing::derivative(const Poly& f) const {
  if (f.degree() < 1) return {};
  Poly::Storage s(f.c_.size() - 1);
  for (std::size_t i = 1; i < f.c_.size(); ++i)
    s[i - 1] = field_.mul(f.c_[i], static_cast<Coeff>(i % q()));
  return Poly(std::move(s));
}

Poly PolyRing::monic(const Poly& f) const {
  if (f.is_zero() || f.leading() == 1) return f;
  return scale(f, field_.inv(f.leading()));
}

Coeff PolyRing::eval(const Poly& f, Coeff x) const {
  Coeff acc = 0;
  for (std::size_t i = f.c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), f.c_[i]);
  return acc;
}

Poly PolyRing::pow_mod(const Poly& base, const BigInt& e, const Poly& m) const {
  if (e < 0) throw std::domain_error("negative exponent");
  Poly result = rem(Poly::constant(1), m);
  Poly b = rem(base, m);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

bool PolyRing::is_squarefree(const Poly& f) const {
  if (f.is_zero()) throw std::domain_error("square-free test of the zero polynomial");
  if (f.degree() == 0) return true;
  Poly d = derivative(f);
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::optional<Poly> PolyRing::sqrt(const Poly& f) const {
  if (f.is_zero()) return Poly{};
  if (f.degree() % 2 != 0 || field_.legendre(f.leading()) != 1) return std::nullopt;
  if (!f.is_monic()) {
    Coeff s = 1;
    while (field_.mul(s, s) != f.leading()) ++s;
    auto root = sqrt(monic(f));
    if (!root) return std::nullopt;
    return scale(*root, s);
  }
  // Solve for the top half of h = x^k + h_{k-1} x^{k-1} + ... from the top
  // coefficients of f, then confirm h^2 == f.
  const auto k = static_cast<std::size_t>(f.degree() / 2);
  const Coeff inv2 = field_.inv(2);
  Poly::Storage h(k + 1, 0);
  h[k] = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    // coefficient of x^{2k-j} in h^2 is 2 h_k h_{k-j} + sum_{0<i<j} h_{k-i} h_{k-j+i}
    Coeff s = 0;
    for (std::size_t i = 1; i < j; ++i) s = field_.add(s, field_.mul(h[k - i], h[k - j + i]));
    h[k - j] = field_.mul(field_.sub(f[2 * k - j], s), inv2);
  }
  Poly root(std::move(h));
  if (mul(root, root) == f) return root;
  return std::nullopt;
}

BigInt PolyRing::norm(const Poly& f) const {
  if (f.is_zero()) return 0;
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q(), static_cast<unsigned long>(f.degree()));
  return r;
}

std::uint64_t PolyRing::monic_count(unsigned n) const { return checked_pow(q(), n); }

Poly PolyRing::monic_from_index(unsigned n, std::uint64_t index) const {
  Poly::Storage s(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    s[i] = static_cast<Coeff>(index % q());
    index /= q();
  }
  s[n] = 1;
  return Poly(std::move(s));
}

std::uint64_t PolyRing::index_of(const Poly& f) const {
  if (!f.is_monic()) throw std::domain_error("index_of requires a monic polynomial");
  std::uint64_t idx = 0;
  for (int i = f.degree() - 1; i >= 0; --i) idx = idx * q() + f[static_cast<std::size_t>(i)];
  return idx;
}

std::uint64_t PolyRing::residue_index(const Poly& f) const {
  std::uint64_t idx = 0;
  for (int i = f.degree(); i >= 0; --i) idx = idx * q() + f[static_cast<std::size_t>(i)];
  return idx;
}

PolyRing::MonicRange PolyRing::monics(unsigned n) const {
  return MonicRange(q(), n, monic_count(n));
}

PolyRing::MonicRange::iterator PolyRing::MonicRange::begin() const {
  return iterator(q_, Poly::monomial(1, n_), count_);
}

PolyRing::MonicRange::iterator& PolyRing::MonicRange::iterator::operator++() {
  if (--remaining_ == 0) return *this;
  // Odometer on the non-leading coefficients; the leading 1 never changes,
  // so the storage never needs trimming.
  auto& c = current_.c_;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (++c[i] < q_) break;
    c[i] = 0;
  }
  return *this;
}

}  // namespace ffl
