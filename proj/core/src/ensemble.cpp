#include "ffl/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ffl/characters.hpp"
#include "ffl/lfunction.hpp"

namespace ffl {

BigInt EnsembleSpec::size() const {
  BigInt s;
  mpz_ui_pow_ui(s.get_mpz_t(), q, 2 * g);
  return s * (q - 1);
}

std::uint64_t EnsembleSpec::candidate_count() const { return checked_pow(q, degree()); }

BigInt EnsembleSpec::norm() const {
  BigInt s;
  mpz_ui_pow_ui(s.get_mpz_t(), q, degree());
  return s;
}

IndexRange prefix_partition(const EnsembleSpec& spec, unsigned prefix_digits, std::uint64_t part) {
  if (prefix_digits > spec.degree()) throw std::invalid_argument("prefix longer than the polynomial");
  const std::uint64_t width = checked_pow(spec.q, spec.degree() - prefix_digits);
  if (part >= checked_pow(spec.q, prefix_digits)) throw std::out_of_range("partition index");
  return {part * width, (part + 1) * width};
}

void for_each_in_H(const PolyRing& ring, const EnsembleSpec& spec, IndexRange range,
                   const std::function<void(const Poly&)>& f) {
  for (std::uint64_t i = range.begin; i < range.end; ++i) {
    Poly D = ring.monic_from_index(spec.degree(), i);
    if (ring.is_squarefree(D)) f(D);
  }
}

void for_each_in_H(const PolyRing& ring, const EnsembleSpec& spec, const std::function<void(const Poly&)>& f) {
  for_each_in_H(ring, spec, IndexRange{0, spec.candidate_count()}, f);
}

std::vector<Poly> enumerate_H(const PolyRing& ring, const EnsembleSpec& spec) {
  std::vector<Poly> out;
  for_each_in_H(ring, spec, [&](const Poly& D) { out.push_back(D); });
  return out;
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection keeps the draw uniform and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % n);
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

std::mt19937_64 block_stream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<Poly> sample_H_block(const PolyRing& ring, const EnsembleSpec& spec, std::uint64_t block,
                                 std::uint64_t count, std::uint64_t seed) {
  auto rng = block_stream(seed, block);
  const std::uint64_t n = spec.candidate_count();
  std::vector<Poly> out;
  out.reserve(count);
  while (out.size() < count) {
    Poly D = ring.monic_from_index(spec.degree(), uniform_below(rng, n));
    if (ring.is_squarefree(D)) out.push_back(std::move(D));
  }
  return out;
}

std::vector<Poly> sample_H(const PolyRing& ring, const EnsembleSpec& spec, std::uint64_t count,
                           std::uint64_t seed) {
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t b = 0; b * kSampleBlock < count; ++b) {
    auto part = sample_H_block(ring, spec, b, std::min(kSampleBlock, count - b * kSampleBlock), seed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

SqrtQRational expected_value(const EnsembleFunction& F, const PolyRing& ring, const EnsembleSpec& spec) {
  SqrtQRational sum(ring.q());
  for_each_in_H(ring, spec, [&](const Poly& D) { sum += F(D); });
  return sum / Rational(spec.size());
}

SqrtQRational mobius_sieve_expected(const EnsembleFunction& F, const IrreducibleTable& table,
                                    const EnsembleSpec& spec) {
  const auto& ring = table.ring();
  SqrtQRational sum(ring.q());
  for (unsigned alpha = 0; 2 * alpha <= spec.degree(); ++alpha) {
    const unsigned beta = spec.degree() - 2 * alpha;
    for (const auto& A : ring.monics(alpha)) {
      const int mu = alpha == 0 ? 1 : mobius(A, table);
      if (mu == 0) continue;
      const Poly A2 = ring.mul(A, A);
      for (const auto& B : ring.monics(beta)) {
        SqrtQRational v = F(ring.mul(A2, B));
        if (mu < 0) sum -= v;
        else sum += v;
      }
    }
  }
  return sum / Rational(spec.size());
}

// --- MomentAccumulator ---------------------------------------------------------

MomentAccumulator::MomentAccumulator(std::uint32_t q, unsigned g)
    : q_(q), g_(g), coeff_sums_(g + 1, 0), square_sums_(g + 1, 0) {}

void MomentAccumulator::add(std::span<const std::int64_t> low, std::span<const std::int64_t> squares) {
  if (low.size() != g_ + 1 || squares.size() != g_ / 2 + 1)
    throw std::invalid_argument("accumulator input has the wrong length");
  ++count_;
  for (unsigned n = 0; n <= g_; ++n) coeff_sums_[n] += static_cast<long>(low[n]);
  for (unsigned k = 0; 2 * k <= g_; ++k) square_sums_[2 * k] += static_cast<long>(squares[k]);
}

void MomentAccumulator::add_raw(const BigInt& count, std::span<const BigInt> coeff_sums,
                                std::span<const BigInt> square_sums) {
  if (coeff_sums.size() != g_ + 1 || square_sums.size() != g_ + 1)
    throw std::invalid_argument("accumulator input has the wrong length");
  count_ += count;
  for (unsigned n = 0; n <= g_; ++n) {
    coeff_sums_[n] += coeff_sums[n];
    square_sums_[n] += square_sums[n];
  }
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.q_ == 0) return;
  if (q_ == 0) {
    *this = other;
    return;
  }
  if (other.q_ != q_ || other.g_ != g_) throw std::invalid_argument("merging accumulators of different ensembles");
  add_raw(other.count_, other.coeff_sums_, other.square_sums_);
}

SqrtQRational MomentAccumulator::weighted(const std::vector<BigInt>& sums, unsigned nmax) const {
  SqrtQRational v(q_);
  for (unsigned n = 0; n <= nmax && n < sums.size(); ++n)
    if (sums[n] != 0) v += SqrtQRational::inverse_sqrt_power(q_, n) * Rational(sums[n]);
  return v;
}

SqrtQRational MomentAccumulator::first_sum() const { return weighted(coeff_sums_, g_); }

SqrtQRational MomentAccumulator::dual_sum() const {
  if (g_ == 0) return SqrtQRational(q_);
  return weighted(coeff_sums_, g_ - 1);
}

SqrtQRational MomentAccumulator::total() const { return first_sum() + dual_sum(); }

SqrtQRational MomentAccumulator::first_square() const { return weighted(square_sums_, g_); }

SqrtQRational MomentAccumulator::first_nonsquare() const { return first_sum() - first_square(); }

SqrtQRational MomentAccumulator::square_part() const {
  SqrtQRational v = first_square();
  if (g_ > 0) v += weighted(square_sums_, g_ - 1);
  return v;
}

SqrtQRational MomentAccumulator::nonsquare_part() const { return total() - square_part(); }

// --- scans ---------------------------------------------------------------------

unsigned effective_prefix_digits(const EnsembleSpec& spec, const ScanOptions& options) {
  if (options.prefix_digits) return std::min(options.prefix_digits, spec.degree() - 1);
  // Enough partitions for load balancing and checkpoint granularity.
  unsigned k = 0;
  while (k + 1 < spec.degree() && checked_pow(spec.q, k) < 64) ++k;
  return k;
}

namespace {

MomentAccumulator scan_partition(const CharacterSumEngine& engine, const EnsembleSpec& spec, IndexRange range) {
  const auto& ring = engine.ring();
  const unsigned g = spec.g;
  std::vector<std::int64_t> low(g + 1), squares(g / 2 + 1);
  std::vector<std::int64_t> low_sum(g + 1, 0), square_sum(g / 2 + 1, 0);
  std::int64_t count = 0;
  for (std::uint64_t i = range.begin; i < range.end; ++i) {
    Poly D = ring.monic_from_index(spec.degree(), i);
    if (!ring.is_squarefree(D)) continue;
    engine.coefficients_with_squares(D, low, squares);
    ++count;
    for (unsigned n = 0; n <= g; ++n) low_sum[n] += low[n];
    for (unsigned k = 0; 2 * k <= g; ++k) square_sum[k] += squares[k];
  }
  MomentAccumulator acc(spec.q, g);
  std::vector<BigInt> cs(g + 1), ss(g + 1, 0);
  for (unsigned n = 0; n <= g; ++n) cs[n] = static_cast<long>(low_sum[n]);
  for (unsigned k = 0; 2 * k <= g; ++k) ss[2 * k] = static_cast<long>(square_sum[k]);
  acc.add_raw(BigInt(static_cast<long>(count)), cs, ss);
  return acc;
}

template <class Work>
void run_parallel(std::uint64_t jobs, unsigned threads, Work&& work, const std::function<bool()>& stop = {}) {
  threads = std::max(1u, threads);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stopped{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      if (stop && stop()) {
        stopped = true;
        return;
      }
      const std::uint64_t j = next.fetch_add(1);
      if (j >= jobs) return;
      try {
        work(j);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs;
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (stopped && next < jobs) throw ScanInterrupted("scan stopped before all partitions finished");
}

}  // namespace

void parallel_for(std::uint64_t jobs, unsigned threads, const std::function<void(std::uint64_t)>& work,
                  const std::function<bool()>& stop) {
  run_parallel(jobs, threads, work, stop);
}

MomentAccumulator first_moment(const CharacterSumEngine& engine, const EnsembleSpec& spec,
                               const ScanOptions& options) {
  if (engine.ring().q() != spec.q) throw std::invalid_argument("engine and ensemble disagree on q");
  if (engine.max_degree() < spec.g) throw std::invalid_argument("character engine must reach degree g");
  const unsigned k = effective_prefix_digits(spec, options);
  const std::uint64_t parts = checked_pow(spec.q, k);
  if (!options.done.empty() && options.done.size() != parts)
    throw std::invalid_argument("checkpoint partition count does not match the scan");

  std::vector<MomentAccumulator> results(parts);
  std::mutex callback_mutex;
  run_parallel(parts, options.threads, [&](std::uint64_t p) {
    if (!options.done.empty() && options.done[p]) return;
    results[p] = scan_partition(engine, spec, prefix_partition(spec, k, p));
    if (options.on_partition) {
      std::lock_guard lock(callback_mutex);
      options.on_partition(p, results[p]);
    }
  }, options.stop);
  MomentAccumulator total(spec.q, spec.g);
  for (const auto& r : results) total.merge(r);
  return total;
}

MomentAccumulator first_moment_naive(const PolyRing& ring, const EnsembleSpec& spec) {
  MomentAccumulator acc(spec.q, spec.g);
  for_each_in_H(ring, spec, [&](const Poly& D) {
    std::vector<std::int64_t> low(spec.g + 1), squares(spec.g / 2 + 1);
    for (unsigned n = 0; n <= spec.g; ++n) {
      std::int64_t sum = 0, sq = 0;
      for (const auto& f : ring.monics(n)) {
        const int c = jacobi(D, f, ring);
        sum += c;
        if (n % 2 == 0 && ring.is_square(f)) sq += c;
      }
      low[n] = sum;
      if (n % 2 == 0) squares[n / 2] = sq;
    }
    acc.add(low, squares);
  });
  return acc;
}

SampleEstimate sample_moment(const CharacterSumEngine& engine, const EnsembleSpec& spec, std::uint64_t samples,
                             std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("sample size must be positive");
  const auto& ring = engine.ring();
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<SqrtQRational> sums(blocks, SqrtQRational(spec.q)), squares(blocks, SqrtQRational(spec.q));
  run_parallel(blocks, threads, [&](std::uint64_t b) {
    const std::uint64_t n = std::min(kSampleBlock, samples - b * kSampleBlock);
    std::vector<std::int64_t> low(spec.g + 1);
    for (const auto& D : sample_H_block(ring, spec, b, n, seed)) {
      engine.coefficients(D, low);
      auto v = approx_fe_from_low<std::int64_t>(spec.q, low);
      squares[b] += v * v;
      sums[b] += v;
    }
  });
  SampleEstimate est;
  est.samples = samples;
  est.sum = SqrtQRational(spec.q);
  est.sum_squares = SqrtQRational(spec.q);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    est.sum += sums[b];
    est.sum_squares += squares[b];
  }
  const auto n = static_cast<double>(samples);
  const SqrtQRational mean_exact = est.sum / Rational(BigInt(static_cast<long>(samples)));
  est.mean = mean_exact.to_double();
  // unbiased variance from exact moments: (sum x^2 - n mean^2) / (n - 1)
  if (samples > 1) {
    SqrtQRational centered = est.sum_squares - mean_exact * est.sum;
    const double var = centered.to_double() / (n - 1);
    est.standard_error = std::sqrt(std::max(0.0, var) / n);
  }
  est.estimated_total = est.mean * spec.size().get_d();
  return est;
}

CoprimeCount coprime_count(unsigned d, const Poly& l, const IrreducibleTable& table) {
  const auto& ring = table.ring();
  if (!l.is_monic()) throw std::domain_error("coprime count needs monic l");
  if (d < static_cast<unsigned>(l.degree()))
    throw std::domain_error("q^d Phi(l)/|l| is exact only for d >= deg l");
  CoprimeCount out;
  out.direct = 0;
  for (const auto& D : ring.monics(d))
    if (ring.gcd(D, l).is_one()) ++out.direct;
  BigInt qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), ring.q(), d);
  out.formula = Rational(qd * euler_phi(l, table), ring.norm(l));
  out.formula.canonicalize();
  return out;
}

CharSumBound nonsquare_char_sum_bound(const Poly& f, const PolyRing& ring, const EnsembleSpec& spec) {
  if (!f.is_monic()) throw std::domain_error("f must be monic");
  if (ring.is_square(f)) throw std::domain_error("f = " + to_string(f) + " is a square");
  CharSumBound out;
  long sum = 0;
  for_each_in_H(ring, spec, [&](const Poly& D) { sum += jacobi(D, f, ring); });
  out.sum = sum;
  // S^2 <= 4^{deg f - 1} q^{2g+1}
  const auto df = static_cast<unsigned>(f.degree());
  BigInt rhs, q2g1;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 4, df - 1);
  mpz_ui_pow_ui(q2g1.get_mpz_t(), ring.q(), 2 * spec.g + 1);
  rhs *= q2g1;
  out.holds = out.sum * out.sum <= rhs;
  out.bound = std::ldexp(1.0, static_cast<int>(df) - 1) * std::pow(ring.q(), spec.g + 0.5);
  return out;
}

NonsquareMagnitude nonsquare_magnitude(const MomentAccumulator& acc) {
  NonsquareMagnitude m;
  const double g = acc.g();
  m.scale = std::pow(2.0, g) * std::pow(static_cast<double>(acc.q()), 1.5 * g + 0.75);
  m.observed_constant = std::fabs(acc.first_nonsquare().to_double()) / m.scale;
  return m;
}

}  // namespace ffl
