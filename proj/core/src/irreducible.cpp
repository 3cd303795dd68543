#include "ffl/irreducible.hpp"

#include <stdexcept>
#include <string>

namespace ffl {

namespace {

int integer_mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

IrreducibleTable::IrreducibleTable(const PolyRing& ring, unsigned cutoff)
    : ring_(ring), cutoff_(cutoff), by_degree_(cutoff + 1) {
  if (cutoff < 1) throw std::invalid_argument("irreducible sieve cutoff must be >= 1");
  const std::uint32_t q = ring.q();
  if (checked_pow(q, cutoff) > (1ull << 28))
    throw std::length_error("irreducible sieve of q^" + std::to_string(cutoff) + " entries is too large");

  for (unsigned d = 1; d <= cutoff; ++d) {
    const std::uint64_t n = ring.monic_count(d);
    std::vector<bool> reducible(n, false);
    for (unsigned k = 1; 2 * k <= d; ++k) {
      for (const auto& p : by_degree_[k]) {
        for (const auto& m : ring.monics(d - k)) {
          // Only mark products p*m whose smallest factor is at most p; every
          // reducible polynomial still gets marked at least once.
          reducible[ring.index_of(ring.mul(p, m))] = true;
        }
      }
    }
    auto& out = by_degree_[d];
    for (std::uint64_t i = 0; i < n; ++i)
      if (!reducible[i]) out.push_back(ring.monic_from_index(d, i));
  }
}

const std::vector<Poly>& IrreducibleTable::of_degree(unsigned d) const {
  if (d < 1 || d > cutoff_)
    throw std::out_of_range("degree " + std::to_string(d) + " outside irreducible table");
  return by_degree_[d];
}

std::vector<Poly> IrreducibleTable::up_to(unsigned max_degree) const {
  std::vector<Poly> all;
  for (unsigned d = 1; d <= max_degree && d <= cutoff_; ++d)
    all.insert(all.end(), by_degree_[d].begin(), by_degree_[d].end());
  return all;
}

BigInt irreducible_count(std::uint32_t q, unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be >= 1");
  BigInt sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    int m = integer_mobius(n / d);
    if (m == 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, d);
    sum += m * term;
  }
  return sum / n;
}

Factorization factorize(const Poly& f, const IrreducibleTable& table) {
  if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  const auto& ring = table.ring();
  Factorization out;
  out.unit = f.leading();
  Poly rest = ring.monic(f);
  for (unsigned d = 1; d <= table.cutoff() && 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    for (const auto& p : table.of_degree(d)) {
      if (2 * d > static_cast<unsigned>(rest.degree())) break;
      unsigned e = 0;
      for (;;) {
        auto [quo, r] = ring.divmod(rest, p);
        if (!r.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e) out.factors.push_back({p, e});
    }
  }
  if (rest.degree() >= 1) {
    // No factor of degree <= min(cutoff, deg/2) remains. If deg/2 was
    // beyond the cutoff we cannot certify irreducibility.
    if (static_cast<unsigned>(rest.degree()) > 2 * table.cutoff() + 1)
      throw CutoffExceeded("factorization of degree-" + std::to_string(f.degree()) +
                           " polynomial needs irreducibles beyond table cutoff " +
                           std::to_string(table.cutoff()));
    // A leftover can coincide with a prime already found only if it was
    // of degree <= cutoff, which the loop above would have removed.
    out.factors.push_back({rest, 1});
  }
  return out;
}

int mobius(const Poly& f, const IrreducibleTable& table) {
  auto fac = factorize(f, table);
  int sign = 1;
  for (const auto& [p, e] : fac.factors) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt euler_phi(const Poly& f, const IrreducibleTable& table) {
  const auto& ring = table.ring();
  auto fac = factorize(f, table);
  // |f| prod (1 - 1/|P|) = prod |P|^{e-1} (|P| - 1)
  BigInt phi = 1;
  for (const auto& [p, e] : fac.factors) {
    BigInt np = ring.norm(p);
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), np.get_mpz_t(), e - 1);
    phi *= pe * (np - 1);
  }
  return phi;
}

BigInt euler_phi_by_count(const Poly& f, const PolyRing& ring) {
  if (f.is_zero()) throw std::domain_error("Phi of the zero polynomial");
  if (f.degree() == 0) return 1;
  // Every residue class mod f, i.e. every g with deg g < deg f (zero included).
  const auto n = static_cast<unsigned>(f.degree());
  const std::uint64_t total = ring.monic_count(n);
  BigInt count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Poly g(ring.monic_from_index(n, idx).coeffs().first(n));
    if (!g.is_zero() && ring.gcd(f, g).is_one()) ++count;
  }
  return count;
}

}  // namespace ffl
