#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace ffl::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
  kInterrupted = 4,
};

enum class Mode { exhaustive, sample };
enum class Format { json, csv };

/// Largest ensemble an exhaustive scan accepts without force.
inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

struct RunConfig {
  std::uint32_t q = 5;
  unsigned g = 1;
  std::optional<unsigned> g_max;
  /// Euler-product cutoff; 0 picks the default for q.
  unsigned cutoff = 0;
  Mode mode = Mode::exhaustive;
  std::uint64_t sample_size = 10'000;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  Format format = Format::json;
  bool force = false;
  std::uint64_t size_cap = kDefaultSizeCap;
  /// Resumable scan state (read if present, rewritten after each partition).
  std::string checkpoint;
  /// Stop after this many new partitions (simulates an interrupted run).
  std::optional<std::uint64_t> stop_after;
  bool timing = false;
  /// Test only: perturb one L-polynomial coefficient before verification.
  bool inject_fault = false;
};

struct CommandResult {
  int exit_code = kOk;
  /// Report body (stdout or --out).
  std::string output;
  /// Human-readable notes for stderr.
  std::string diagnostics;
};

/// Euler-product cutoff used when none is given: 12 for q = 3, 10 for
/// q = 5, otherwise the smallest N with q^N >= 10^7.
unsigned default_cutoff(std::uint32_t q);

void validate(const RunConfig& config);

/// Exact identity suites over H_{2g+1,q}: functional equation, approximate
/// FE == center, point-count oracle, RH diagnostic; plus the sieve (Gauss
/// count), Jacobi dual-algorithm and reciprocity suites at small degree.
CommandResult cmd_verify(const RunConfig& config);

/// First-moment report for g (or g..g_max): exact moment, main term, ratio.
CommandResult cmd_moment(const RunConfig& config);

CommandResult cmd_constants(std::uint32_t q, unsigned cutoff);
CommandResult cmd_lpoly(const std::string& D, std::uint32_t q);
CommandResult cmd_symbol(const std::string& f, const std::string& Q, std::uint32_t q);
CommandResult cmd_oracle(const std::string& D, std::uint32_t q);

/// Sets the stop flag polled by running scans (signal-safe).
void request_stop() noexcept;

}  // namespace ffl::cli
