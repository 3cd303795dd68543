#include "ffl/characters.hpp"

#include <stdexcept>
#include <utility>

namespace ffl {

SymbolValue residue_symbol_prime(const Poly& f, const Poly& P, const PolyRing& ring) {
  if (P.degree() < 1 || !P.is_monic())
    throw std::domain_error("prime symbol needs a monic denominator of positive degree");
  Poly r = ring.rem(f, P);
  if (r.is_zero()) return 0;
  BigInt e = (ring.norm(P) - 1) / 2;
  Poly v = ring.pow_mod(r, e, P);
  if (v.is_one()) return 1;
  if (v.degree() == 0 && v[0] == ring.q() - 1) return -1;
  throw std::domain_error("denominator " + to_string(P) + " is not irreducible");
}

SymbolValue scalar_symbol(Coeff alpha, unsigned deg_Q, const FieldSpec& field) {
  int l = field.legendre(alpha % field.q());
  if (l == 0) return deg_Q == 0 ? 1 : 0;
  return (deg_Q % 2 == 0) ? 1 : l;
}

namespace {

using Buffer = boost::container::small_vector<Coeff, 32>;

void trim(Buffer& b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
}

// a <- a mod b, b monic.
void reduce_monic(Buffer& a, const Buffer& b, const FieldSpec& field) {
  const std::size_t db = b.size() - 1;
  const std::uint32_t q = field.q();
  while (a.size() > db) {
    const std::size_t k = a.size() - 1;
    const Coeff c = a[k];
    if (c != 0) {
      const Coeff m = q - c;  // subtract c * b  ==  add (q - c) * b
      for (std::size_t i = 0; i < db; ++i)
        a[k - db + i] = static_cast<Coeff>((a[k - db + i] + static_cast<std::uint64_t>(m) * b[i]) % q);
    }
    a.pop_back();
    trim(a);
  }
}

}  // namespace

SymbolValue jacobi_kernel(std::span<const Coeff> f, std::span<const Coeff> Q, const FieldSpec& field) {
  Buffer a(f.begin(), f.end());
  Buffer b(Q.begin(), Q.end());
  trim(a);
  const bool flip_on_odd = (field.q() % 4) == 3;  // (q-1)/2 odd
  int sign = 1;
  for (;;) {
    if (b.size() == 1) return sign;  // (a / 1) = 1
    reduce_monic(a, b, field);
    if (a.empty()) return 0;
    const std::size_t deg_b = b.size() - 1;
    const Coeff c = a.back();
    if (c != 1) {
      if (deg_b % 2 == 1) sign *= field.legendre(c);
      const Coeff ci = field.inv(c);
      for (auto& v : a) v = field.mul(v, ci);
    }
    if (a.size() == 1) return sign;  // (1 / b) = 1
    const std::size_t deg_a = a.size() - 1;
    if (flip_on_odd && (deg_a % 2 == 1) && (deg_b % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
}

SymbolValue jacobi(const Poly& f, const Poly& Q, const PolyRing& ring) {
  if (!Q.is_monic()) throw std::domain_error("Jacobi symbol needs a monic denominator");
  return jacobi_kernel(f.coeffs(), Q.coeffs(), ring.field());
}

SymbolValue jacobi_by_factorization(const Poly& f, const Poly& Q, const IrreducibleTable& table) {
  if (!Q.is_monic()) throw std::domain_error("Jacobi symbol needs a monic denominator");
  const auto& ring = table.ring();
  SymbolValue result = 1;
  for (const auto& [P, e] : factorize(Q, table).factors) {
    SymbolValue s = residue_symbol_prime(f, P, ring);
    if (s == 0) return 0;
    if (e % 2 == 1) result *= s;
  }
  return result;
}

bool reciprocity_check(const Poly& A, const Poly& B, const IrreducibleTable& table) {
  const auto& ring = table.ring();
  if (!A.is_monic() || !B.is_monic()) throw std::domain_error("reciprocity needs monic arguments");
  if (!ring.gcd(A, B).is_one()) throw std::domain_error("reciprocity needs coprime arguments");
  const SymbolValue ab = jacobi_by_factorization(A, B, table);
  const SymbolValue ba = jacobi_by_factorization(B, A, table);
  const std::uint64_t exponent =
      static_cast<std::uint64_t>((ring.q() - 1) / 2) * static_cast<std::uint64_t>(A.degree()) *
      static_cast<std::uint64_t>(B.degree());
  const int sign = exponent % 2 ? -1 : 1;
  return ab == ba * sign;
}

}  // namespace ffl
