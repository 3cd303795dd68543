#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ffl/poly.hpp"

namespace ffl {

/// All monic irreducibles of each degree 1..cutoff, sorted in enumeration
/// order. Built once and shared read-only.
class IrreducibleTable {
public:
  /// Sieve of products: a degree-d monic is reducible iff it is a multiple
  /// of some irreducible of degree <= d/2. Throws std::invalid_argument for
  /// cutoff < 1 and std::length_error when q^cutoff exceeds 2^28.
  IrreducibleTable(const PolyRing& ring, unsigned cutoff);

  const PolyRing& ring() const noexcept { return ring_; }
  unsigned cutoff() const noexcept { return cutoff_; }
  /// Irreducibles of degree d (1 <= d <= cutoff).
  const std::vector<Poly>& of_degree(unsigned d) const;
  std::size_t count(unsigned d) const { return of_degree(d).size(); }
  /// All irreducibles of degree <= max_degree, by degree then order.
  std::vector<Poly> up_to(unsigned max_degree) const;

private:
  PolyRing ring_;
  unsigned cutoff_;
  std::vector<std::vector<Poly>> by_degree_;  // index 0 unused
};

/// Number of monic irreducibles of degree n by Gauss's formula
/// (1/n) * sum_{d | n} mu(n/d) q^d.
BigInt irreducible_count(std::uint32_t q, unsigned n);

struct Factor {
  Poly prime;
  unsigned exponent;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Monic factorization: f = leading * prod prime^exponent. Primes appear in
/// table order.
struct Factorization {
  Coeff unit = 1;
  std::vector<Factor> factors;
};

/// Trial division against the table. Any cofactor left with degree at most
/// 2*cutoff+1 and no factor of degree <= cutoff is itself irreducible;
/// anything larger throws CutoffExceeded. Throws std::domain_error on zero.
Factorization factorize(const Poly& f, const IrreducibleTable& table);

struct CutoffExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// mu(f) in {-1, 0, 1}. f must be nonzero.
int mobius(const Poly& f, const IrreducibleTable& table);
/// Phi(f) = |f| prod_{P | f} (1 - 1/|P|). f must be nonzero.
BigInt euler_phi(const Poly& f, const IrreducibleTable& table);
/// Phi(f) by direct count of residues g mod f (deg g < deg f, any leading
/// coefficient) with gcd(f, g) = 1.
/// Exponential in deg f; a test oracle.
BigInt euler_phi_by_count(const Poly& f, const PolyRing& ring);

}  // namespace ffl
