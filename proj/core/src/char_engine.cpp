#include "ffl/char_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ffl/characters.hpp"

namespace ffl {

namespace {

using Buffer = boost::container::small_vector<Coeff, 32>;

__extension__ using u128 = unsigned __int128;

// a mod q for a < 2^32 by one 128-bit multiply (Lemire's fastmod).
struct FastMod {
  explicit FastMod(std::uint64_t q) : q(q), m(~std::uint64_t{0} / q + 1) {}
  std::uint64_t operator()(std::uint64_t a) const {
    return static_cast<std::uint64_t>((static_cast<u128>(m * a) * q) >> 64);
  }
  std::uint64_t q;
  std::uint64_t m;
};

// r <- D mod P (P monic), returned trimmed. Reduction mod q is lazy: each
// elimination step adds less than q^2 to a slot.
template <class Mod>
void reduce_with(std::span<const Coeff> D, std::span<const Coeff> pc, std::uint64_t q, Mod mod, Buffer& r) {
  thread_local boost::container::small_vector<std::uint64_t, 32> w;
  w.assign(D.begin(), D.end());
  const std::size_t dp = pc.size() - 1;
  for (std::size_t k = w.size(); k-- > dp;) {
    const std::uint64_t c = mod(w[k]);
    if (c != 0)
      for (std::size_t i = 0; i < dp; ++i) w[k - dp + i] += (q - c) * pc[i];
  }
  const std::size_t n = std::min(dp, w.size());
  r.resize(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Coeff>(mod(w[i]));
  while (!r.empty() && r.back() == 0) r.pop_back();
}

void reduce_into(std::span<const Coeff> D, const Poly& P, const FieldSpec& field, Buffer& r) {
  const std::uint64_t q = field.q();
  // Slots stay below (deg D + 1) q^2; fastmod needs them below 2^32.
  if ((D.size() + 1) * q * q < (std::uint64_t{1} << 32))
    reduce_with(D, P.coeffs(), q, FastMod(q), r);
  else
    reduce_with(D, P.coeffs(), q, [q](std::uint64_t a) { return a % q; }, r);
}

std::uint64_t index_of_residue(const Buffer& r, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = r.size(); i-- > 0;) idx = idx * q + r[i];
  return idx;
}

// t[index(s^2 mod P)] = 1 for every nonzero residue s of the degree-d
// monic P. Residue indices are base-q digit strings, constant term lowest.
template <class Mod>
void mark_squares_with(std::span<const Coeff> pc, unsigned d, std::uint64_t q, Mod mod, std::int8_t* t) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < d; ++i) size *= q;
  std::vector<std::uint64_t> s(d, 0), sq(2 * d - 1, 0);
  for (std::uint64_t i = 1; i < size; ++i) {
    for (unsigned k = 0; ++s[k] == q; ++k) s[k] = 0;
    std::fill(sq.begin(), sq.end(), 0);
    for (unsigned a = 0; a < d; ++a)
      if (s[a] != 0)
        for (unsigned b = 0; b < d; ++b) sq[a + b] += s[a] * s[b];
    for (std::size_t k = sq.size(); k-- > d;) {
      const std::uint64_t c = mod(sq[k]);
      if (c != 0)
        for (unsigned j = 0; j < d; ++j) sq[k - d + j] += (q - c) * pc[j];
    }
    std::uint64_t r = 0;
    for (unsigned k = d; k-- > 0;) r = r * q + mod(sq[k]);
    t[r] = 1;
  }
}

void mark_squares(const Poly& P, unsigned d, std::uint64_t q, std::int8_t* t) {
  if (2 * (d + 1) * q * q < (std::uint64_t{1} << 32))
    mark_squares_with(P.coeffs(), d, q, FastMod(q), t);
  else
    mark_squares_with(P.coeffs(), d, q, [q](std::uint64_t a) { return a % q; }, t);
}

}  // namespace

CharacterSumEngine::CharacterSumEngine(const IrreducibleTable& table, unsigned max_degree,
                                       std::size_t table_budget)
    : ring_(table.ring()), max_degree_(max_degree) {
  if (max_degree > table.cutoff())
    throw std::invalid_argument("character engine degree " + std::to_string(max_degree) +
                                " exceeds irreducible table cutoff " + std::to_string(table.cutoff()));
  std::size_t used = 0;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const std::uint64_t size = ring_.monic_count(d);
    for (const auto& P : table.of_degree(d)) {
      Prime p{P, d, -1};
      if (used + size <= table_budget) {
        p.table_offset = static_cast<std::int64_t>(residue_tables_.size());
        residue_tables_.resize(residue_tables_.size() + size, -1);
        std::int8_t* t = residue_tables_.data() + p.table_offset;
        t[0] = 0;
        mark_squares(P, d, ring_.q(), t);
        used += size;
      }
      primes_.push_back(std::move(p));
    }
  }
}

std::size_t CharacterSumEngine::tabulated_prime_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(primes_.begin(), primes_.end(), [](const Prime& p) { return p.table_offset >= 0; }));
}

int CharacterSumEngine::character(std::span<const Coeff> D, const Prime& p) const {
  thread_local Buffer r;
  reduce_into(D, p.poly, ring_.field(), r);
  if (r.empty()) return 0;
  if (p.table_offset >= 0)
    return residue_tables_[static_cast<std::size_t>(p.table_offset) + index_of_residue(r, ring_.q())];
  return jacobi_kernel(std::span<const Coeff>(r.data(), r.size()), p.poly.coeffs(), ring_.field());
}

int CharacterSumEngine::prime_character(const Poly& D, std::size_t i) const {
  return character(D.coeffs(), primes_.at(i));
}

void CharacterSumEngine::coefficients(const Poly& D, std::span<std::int64_t> out) const {
  coefficients_with_squares(D, out, {});
}

void CharacterSumEngine::coefficients_with_squares(const Poly& D, std::span<std::int64_t> out,
                                                   std::span<std::int64_t> squares) const {
  if (D.is_zero()) throw std::domain_error("character sums need a nonzero D");
  if (out.empty()) return;
  const std::size_t nmax = out.size() - 1;
  const std::size_t kmax = squares.empty() ? 0 : squares.size() - 1;
  if (nmax > max_degree_ || 2 * kmax > max_degree_)
    throw std::out_of_range("requested degree exceeds character engine range");
  std::fill(out.begin(), out.end(), 0);
  out[0] = 1;
  if (!squares.empty()) {
    std::fill(squares.begin(), squares.end(), 0);
    squares[0] = 1;
  }
  // chi_D(f) = (D / f) = (D mod P / P) on primes; multiplicative in f.
  for (const auto& p : primes_) {
    if (p.degree > nmax && p.degree > kmax) break;
    const int c = character(D.coeffs(), p);
    if (p.degree <= nmax && c != 0)
      for (std::size_t n = p.degree; n <= nmax; ++n) out[n] += c * out[n - p.degree];
    if (p.degree <= kmax && c != 0)
      for (std::size_t k = p.degree; k <= kmax; ++k) squares[k] += squares[k - p.degree];
  }
}

}  // namespace ffl
