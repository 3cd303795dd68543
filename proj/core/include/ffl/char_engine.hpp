#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffl/irreducible.hpp"

namespace ffl {

/// Fast A_D(n) through the Euler product
///   L(u, chi_D) = prod_P (1 - chi_D(P) u^{deg P})^{-1},
/// truncated at degree max_degree. chi_D(P) = (D mod P / P) is a table
/// lookup for primes whose residue tables fit the budget and a
/// reciprocity-Euclid Jacobi symbol otherwise.
///
/// Built once per (q, max_degree); const methods are safe to call from
/// many threads.
class CharacterSumEngine {
public:
  /// The table must reach max_degree. table_budget caps the total number
  /// of residue-table entries (one byte each).
  CharacterSumEngine(const IrreducibleTable& table, unsigned max_degree,
                     std::size_t table_budget = std::size_t{1} << 24);

  const PolyRing& ring() const noexcept { return ring_; }
  unsigned max_degree() const noexcept { return max_degree_; }
  std::size_t prime_count() const noexcept { return primes_.size(); }
  std::size_t tabulated_prime_count() const noexcept;

  /// out[n] = A_D(n) for n < out.size(); out.size() - 1 <= max_degree.
  /// Works for any nonzero D.
  void coefficients(const Poly& D, std::span<std::int64_t> out) const;

  /// As coefficients(), and additionally squares[k] = sum over monic l of
  /// degree k of chi_D(l^2) = #{l : gcd(l, D) = 1}, for k < squares.size()
  /// with 2*(squares.size()-1) <= max_degree.
  void coefficients_with_squares(const Poly& D, std::span<std::int64_t> out,
                                 std::span<std::int64_t> squares) const;

  /// chi_D(P) for the i-th prime (degree-then-table order).
  int prime_character(const Poly& D, std::size_t i) const;

private:
  struct Prime {
    Poly poly;
    unsigned degree;
    std::int64_t table_offset;  // -1 when not tabulated
  };

  int character(std::span<const Coeff> D, const Prime& p) const;

  PolyRing ring_;
  unsigned max_degree_;
  std::vector<Prime> primes_;
  std::vector<std::int8_t> residue_tables_;
};

}  // namespace ffl
