#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffl/char_engine.hpp"
#include "ffl/irreducible.hpp"
#include "ffl/sqrtq.hpp"

namespace ffl {

/// H_{2g+1,q}: square-free monic D of degree 2g+1.
struct EnsembleSpec {
  std::uint32_t q;
  unsigned g;

  unsigned degree() const noexcept { return 2 * g + 1; }
  /// (q-1) q^{2g}
  BigInt size() const;
  /// q^{2g+1}, the number of monic candidates.
  std::uint64_t candidate_count() const;
  /// |D| = q^{2g+1}
  BigInt norm() const;
};

/// Candidate index range [begin, end) over monic polynomials of degree
/// 2g+1 in monic_from_index order. Partition p of q^k covers all D whose
/// top k non-leading coefficients spell p in base q.
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};
IndexRange prefix_partition(const EnsembleSpec& spec, unsigned prefix_digits, std::uint64_t part);

/// Calls f(D) for every square-free D with candidate index in range, in
/// increasing index order.
void for_each_in_H(const PolyRing& ring, const EnsembleSpec& spec, IndexRange range,
                   const std::function<void(const Poly&)>& f);
void for_each_in_H(const PolyRing& ring, const EnsembleSpec& spec, const std::function<void(const Poly&)>& f);
/// Materialized H, for small ensembles.
std::vector<Poly> enumerate_H(const PolyRing& ring, const EnsembleSpec& spec);

/// Uniform sample of H with replacement. Sample i is drawn from a stream
/// seeded by (seed, i / block), so the result does not depend on threads.
std::vector<Poly> sample_H(const PolyRing& ring, const EnsembleSpec& spec, std::uint64_t count,
                           std::uint64_t seed);
/// Draws of block b only (samples [b*kSampleBlock, ...)).
inline constexpr std::uint64_t kSampleBlock = 1024;
std::vector<Poly> sample_H_block(const PolyRing& ring, const EnsembleSpec& spec, std::uint64_t block,
                                 std::uint64_t count, std::uint64_t seed);

using EnsembleFunction = std::function<SqrtQRational(const Poly&)>;

/// <F> = (1/#H) sum_{D in H} F(D), exactly.
SqrtQRational expected_value(const EnsembleFunction& F, const PolyRing& ring, const EnsembleSpec& spec);

/// Same mean via the sieve sum_{A^2 | D} mu(A): sum over 2a + b = 2g+1 of
/// sum_{B deg b} sum_{A deg a} mu(A) F(A^2 B). F must be defined on every
/// monic D of degree 2g+1. The table must factor polynomials of degree g.
SqrtQRational mobius_sieve_expected(const EnsembleFunction& F, const IrreducibleTable& table,
                                    const EnsembleSpec& spec);

/// Exact, mergeable first-moment sums.
///
/// Stores, per degree n <= g, the ensemble sums of A_D(n) and of the square
/// part sum_{deg l = n/2} chi_D(l^2). All derived moments are fixed linear
/// combinations of these, so merging is integer addition and the result
/// does not depend on scan order or thread count.
class MomentAccumulator {
public:
  MomentAccumulator() = default;
  MomentAccumulator(std::uint32_t q, unsigned g);

  std::uint32_t q() const noexcept { return q_; }
  unsigned g() const noexcept { return g_; }
  const BigInt& count() const noexcept { return count_; }
  const std::vector<BigInt>& coefficient_sums() const noexcept { return coeff_sums_; }
  const std::vector<BigInt>& square_sums() const noexcept { return square_sums_; }

  /// One D: low[n] = A_D(n), n = 0..g; squares[k] = #{l deg k : (l, D) = 1},
  /// k = 0..g/2.
  void add(std::span<const std::int64_t> low, std::span<const std::int64_t> squares);
  /// Raw sums, for checkpoint restore.
  void add_raw(const BigInt& count, std::span<const BigInt> coeff_sums, std::span<const BigInt> square_sums);
  void merge(const MomentAccumulator& other);

  /// sum_D L(q^{-1/2}, chi_D): first sum (n <= g) plus dual sum (m <= g-1).
  SqrtQRational total() const;
  /// sum_{n<=g} q^{-n/2} sum_D A_D(n)
  SqrtQRational first_sum() const;
  /// sum_{m<=g-1} q^{-m/2} sum_D A_D(m)
  SqrtQRational dual_sum() const;
  /// Square-f contributions of both sums; total = square_part + nonsquare_part.
  SqrtQRational square_part() const;
  SqrtQRational nonsquare_part() const;
  /// Square / non-square split of the first sum only.
  SqrtQRational first_square() const;
  SqrtQRational first_nonsquare() const;

  friend bool operator==(const MomentAccumulator&, const MomentAccumulator&) = default;

private:
  SqrtQRational weighted(const std::vector<BigInt>& sums, unsigned nmax) const;

  std::uint32_t q_ = 0;
  unsigned g_ = 0;
  BigInt count_ = 0;
  std::vector<BigInt> coeff_sums_;   // size g+1
  std::vector<BigInt> square_sums_;  // size g+1, zero at odd n
};

struct ScanOptions {
  unsigned threads = 1;
  /// Top coefficients used to cut the scan into q^k partitions; 0 = auto.
  unsigned prefix_digits = 0;
  /// Partitions to skip (already in a checkpoint).
  std::vector<bool> done;
  /// Called after each finished partition (from the worker thread, under
  /// a mutex) with the partition's own accumulator.
  std::function<void(std::uint64_t part, const MomentAccumulator&)> on_partition;
  /// Polled before each partition; once true, no new partitions start and
  /// the scan throws ScanInterrupted after the running ones finish.
  std::function<bool()> stop;
};

struct ScanInterrupted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs work(0..jobs-1) on up to `threads` workers pulling from a shared
/// counter. The first exception is rethrown after all workers stop; if
/// stop() turns true before every job has started, throws ScanInterrupted.
void parallel_for(std::uint64_t jobs, unsigned threads, const std::function<void(std::uint64_t)>& work,
                  const std::function<bool()>& stop = {});

/// Partition count a scan over spec will use with these options.
unsigned effective_prefix_digits(const EnsembleSpec& spec, const ScanOptions& options);

/// Exhaustive first moment with the engine (which must reach degree g).
MomentAccumulator first_moment(const CharacterSumEngine& engine, const EnsembleSpec& spec,
                               const ScanOptions& options = {});

/// Reference: per-D approx_fe_value by naive character sums.
MomentAccumulator first_moment_naive(const PolyRing& ring, const EnsembleSpec& spec);

struct SampleEstimate {
  std::uint64_t samples = 0;
  SqrtQRational sum;          // sum of sampled central values
  SqrtQRational sum_squares;  // sum of their squares
  double mean = 0;            // sample mean of L(q^{-1/2})
  double standard_error = 0;  // of the mean
  double estimated_total = 0; // mean * #H
};

SampleEstimate sample_moment(const CharacterSumEngine& engine, const EnsembleSpec& spec, std::uint64_t samples,
                             std::uint64_t seed, unsigned threads = 1);

/// #{D monic deg d : (D, l) = 1} counted directly, and the closed
/// form q^d Phi(l)/|l| (exact for d >= deg l; std::domain_error otherwise).
struct CoprimeCount {
  BigInt direct;
  Rational formula;
};
CoprimeCount coprime_count(unsigned d, const Poly& l, const IrreducibleTable& table);

/// S = sum_{D in H} chi_D(f) against 2^{deg f - 1} q^{g + 1/2}.
struct CharSumBound {
  BigInt sum;
  bool holds = false;
  double bound = 0;
};
/// f monic, not a square (std::domain_error otherwise).
CharSumBound nonsquare_char_sum_bound(const Poly& f, const PolyRing& ring, const EnsembleSpec& spec);

/// Non-square scale 2^g q^{(3/2)g + 3/4}, and the observed constant
/// |first_nonsquare| / scale.
struct NonsquareMagnitude {
  double scale = 0;
  double observed_constant = 0;
};
NonsquareMagnitude nonsquare_magnitude(const MomentAccumulator& acc);

}  // namespace ffl
