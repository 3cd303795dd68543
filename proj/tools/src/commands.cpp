#include "ffl/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "checkpoint.hpp"
#include "ffl/asymptotics.hpp"
#include "ffl/char_engine.hpp"
#include "ffl/characters.hpp"
#include "ffl/ensemble.hpp"
#include "ffl/lfunction.hpp"
#include "ffl/oracle.hpp"
#include "ffl/serialize.hpp"
#include <nlohmann/json.hpp>

namespace ffl::cli {

using json = nlohmann::ordered_json;

namespace {

std::atomic<bool> stop_requested{false};

// Residue-table entries (one byte each) the character engine may allocate.
constexpr std::size_t kEngineBudget = std::size_t{1} << 26;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ResourceCapError& e) {
    return {kResourceCap, "", std::string("error: ") + e.what() + "\n"};
  } catch (const CutoffExceeded& e) {
    return {kResourceCap, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::overflow_error& e) {
    return {kResourceCap, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kUsageError, "", std::string("error: ") + e.what() + "\n"};
  }
}

json poly_json(const Poly& f) {
  json a = json::array();
  for (auto c : f.coeffs()) a.push_back(c);
  return a;
}

json bigints_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string format_double(double v, int digits = 17) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

HighPrec high_prec(const SqrtQRational& v) {
  return to_high_prec(v.a()) + to_high_prec(v.b()) * boost::multiprecision::sqrt(HighPrec(v.q()));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- moment rows ---------------------------------------------------------------

const char* const kMomentColumns[] = {
    "q",           "g",           "mode",           "ensemble_size",    "samples",          "seed",
    "moment_a",    "moment_b",    "moment",         "moment_stderr",    "main_term",        "ratio",
    "square_part_a", "square_part_b", "nonsquare_part_a", "nonsquare_part_b", "cutoff", "tail_bound",
    "runtime_seconds"};

using Row = std::map<std::string, std::string>;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_moment(const std::vector<Row>& rows, Format format) {
  if (format == Format::csv) {
    std::string out = "# ffl-moment-csv v1\n";
    for (std::size_t i = 0; i < std::size(kMomentColumns); ++i) out += (i ? "," : "") + std::string(kMomentColumns[i]);
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < std::size(kMomentColumns); ++i) {
        const auto it = row.find(kMomentColumns[i]);
        out += (i ? "," : "") + csv_escape(it == row.end() ? "" : it->second);
      }
      out += "\n";
    }
    return out;
  }
  json j;
  j["schema"] = "ffl-moment v1";
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json r;
    for (const char* col : kMomentColumns) {
      const auto it = row.find(col);
      if (it == row.end())
        r[col] = nullptr;
      else
        r[col] = it->second;
    }
    j["rows"].push_back(r);
  }
  return dump(j);
}

// --- scan control --------------------------------------------------------------

struct StopControl {
  std::optional<std::uint64_t> budget;
  std::atomic<std::uint64_t> finished{0};

  bool operator()() const {
    return stop_requested.load() || (budget && finished.load() >= *budget);
  }
};

std::string interrupted_message(const RunConfig& config) {
  std::string msg = "scan interrupted";
  if (!config.checkpoint.empty()) msg += "; resume with --checkpoint " + config.checkpoint;
  return msg + "\n";
}

EnsembleSpec checked_spec(const RunConfig& config, unsigned g) {
  const EnsembleSpec spec{config.q, g};
  if (config.mode == Mode::exhaustive) {
    std::uint64_t candidates = 0;
    try {
      candidates = spec.candidate_count();
    } catch (const std::overflow_error&) {
      throw ResourceCapError("ensemble H(q=" + std::to_string(config.q) + ", g=" + std::to_string(g) +
                             ") is too large to enumerate");
    }
    if (candidates > config.size_cap && !config.force)
      throw ResourceCapError("exhaustive scan of " + std::to_string(candidates) + " candidates exceeds the cap of " +
                             std::to_string(config.size_cap) + "; use --mode sample or --force");
  }
  return spec;
}

}  // namespace

void request_stop() noexcept { stop_requested.store(true); }

unsigned default_cutoff(std::uint32_t q) {
  if (q == 3) return 12;
  if (q == 5) return 10;
  unsigned n = 1;
  for (std::uint64_t p = q; p < 10'000'000; p *= q) ++n;
  return n;
}

void validate(const RunConfig& config) {
  FieldSpec check(config.q);
  (void)check;
  if (config.g < 1) throw UsageError("--g must be at least 1");
  if (config.g_max && *config.g_max < config.g) throw UsageError("--g-max must be >= --g");
  if (config.threads < 1) throw UsageError("--threads must be at least 1");
  if (config.mode == Mode::sample) {
    if (!config.seed) throw UsageError("sample mode requires --seed");
    if (config.sample_size == 0) throw UsageError("--sample-size must be positive");
  }
}

// --- verify ----------------------------------------------------------------------

namespace {

struct SuiteTally {
  std::map<std::string, std::uint64_t> checked;
  std::map<std::string, std::uint64_t> failed;
  json failures = json::array();

  void record(const std::string& suite, bool ok, const json& input) {
    ++checked[suite];
    if (ok) return;
    ++failed[suite];
    if (failures.size() < 100) failures.push_back(json{{"suite", suite}, {"input", input}});
  }

  void merge(const SuiteTally& o) {
    for (const auto& [k, v] : o.checked) checked[k] += v;
    for (const auto& [k, v] : o.failed) failed[k] += v;
    for (const auto& f : o.failures)
      if (failures.size() < 100) failures.push_back(f);
  }

  json to_json() const {
    return json{{"checked", checked}, {"failed", failed}, {"failures", failures}};
  }

  static SuiteTally from_json(const json& j) {
    SuiteTally t;
    for (const auto& [k, v] : j.at("checked").items()) t.checked[k] = v.get<std::uint64_t>();
    for (const auto& [k, v] : j.at("failed").items()) t.failed[k] = v.get<std::uint64_t>();
    t.failures = j.at("failures");
    return t;
  }
};

constexpr double kRhTolerance = 1e-9;


void verify_curve(const Poly& D, const CharacterSumEngine& engine, bool corrupt, SuiteTally& tally) {
  const auto& ring = engine.ring();
  auto L = l_polynomial(D, engine);
  if (corrupt) L.coeffs.back() += 1;
  const json input = poly_json(D);
  tally.record("functional_equation", check_functional_equation(L), input);
  tally.record("approx_fe", approx_fe_value(D, engine) == evaluate_center(L), input);
  tally.record("oracle", oracle_compare(D, L, ring), input);
  bool rh = false;
  try {
    rh = rh_root_check(L, kRhTolerance).pass;
  } catch (const NumericError&) {
    rh = false;
  }
  tally.record("rh", rh, input);
}

// Exact suites that do not depend on the ensemble: Gauss count of the sieve,
// Jacobi by reciprocity-Euclid vs by factorization, and reciprocity itself.
SuiteTally verify_global(const PolyRing& ring, unsigned g) {
  SuiteTally tally;
  const unsigned sieve_degree = std::min(2 * g, 8u);
  unsigned cutoff = 1;
  while (cutoff < sieve_degree && checked_pow(ring.q(), cutoff + 1) <= (1u << 20)) ++cutoff;
  IrreducibleTable table(ring, cutoff);
  for (unsigned n = 1; n <= cutoff; ++n) {
    BigInt sum = 0;
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) sum += d * BigInt(static_cast<unsigned long>(table.count(d)));
    tally.record("sieve_gauss", sum == BigInt(static_cast<unsigned long>(checked_pow(ring.q(), n))), n);
  }
  const unsigned pair_degree = ring.q() <= 5 ? 3 : 2;
  for (unsigned da = 1; da <= pair_degree; ++da)
    for (const auto& A : ring.monics(da))
      for (unsigned db = 1; db <= pair_degree; ++db)
        for (const auto& B : ring.monics(db)) {
          const json input = json::array({poly_json(A), poly_json(B)});
          tally.record("jacobi_dual", jacobi(A, B, ring) == jacobi_by_factorization(A, B, table), input);
          if (ring.gcd(A, B).is_one()) tally.record("reciprocity", reciprocity_check(A, B, table), input);
        }
  return tally;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    PolyRing ring(config.q);
    const unsigned g_hi = config.g_max.value_or(config.g);
    json report;
    report["schema"] = "ffl-verify v1";
    report["q"] = config.q;
    report["mode"] = config.mode == Mode::exhaustive ? "exhaustive" : "sample";
    if (config.mode == Mode::sample) {
      report["samples"] = config.sample_size;
      report["seed"] = *config.seed;
    }
    report["runs"] = json::array();
    bool all_ok = true;

    Checkpoint checkpoint(config.checkpoint, "verify", config);
    for (unsigned g = config.g; g <= g_hi; ++g) {
      const EnsembleSpec spec = checked_spec(config, g);
      IrreducibleTable table(ring, 2 * g);
      CharacterSumEngine engine(table, 2 * g, kEngineBudget);

      // Work units: prefix partitions (exhaustive) or sample blocks.
      const ScanOptions defaults;
      const unsigned k = effective_prefix_digits(spec, defaults);
      const std::uint64_t units = config.mode == Mode::exhaustive
                                      ? checked_pow(config.q, k)
                                      : (config.sample_size + kSampleBlock - 1) / kSampleBlock;
      std::vector<SuiteTally> results(units);
      std::vector<bool> have(units, false);
      for (const auto& [unit, payload] : checkpoint.partitions(g, k)) {
        results.at(unit) = SuiteTally::from_json(payload);
        have[unit] = true;
      }
      StopControl stop;
      stop.budget = config.stop_after;
      std::mutex mutex;
      std::atomic<bool> fault_pending = config.inject_fault && g == config.g;
      auto work = [&](std::uint64_t unit) {
        if (have[unit]) return;
        SuiteTally tally;
        auto check = [&](const Poly& D) {
          verify_curve(D, engine, fault_pending.exchange(false), tally);
        };
        if (config.mode == Mode::exhaustive) {
          for_each_in_H(ring, spec, prefix_partition(spec, k, unit), check);
        } else {
          const std::uint64_t count = std::min<std::uint64_t>(kSampleBlock, config.sample_size - unit * kSampleBlock);
          for (const auto& D : sample_H_block(ring, spec, unit, count, *config.seed)) check(D);
        }
        std::lock_guard lock(mutex);
        results[unit] = tally;
        checkpoint.record(g, k, unit, tally.to_json());
        ++stop.finished;
      };
      try {
        parallel_for(units, config.threads, work, std::cref(stop));
      } catch (const ScanInterrupted&) {
        return {kInterrupted, "", interrupted_message(config)};
      }

      SuiteTally total = verify_global(ring, g);
      for (const auto& r : results) total.merge(r);
      std::uint64_t curves = total.checked["functional_equation"];
      bool ok = true;
      for (const auto& [suite, n] : total.failed) ok &= n == 0;
      all_ok &= ok;
      json run;
      run["g"] = g;
      run["curves"] = curves;
      if (config.mode == Mode::exhaustive) run["ensemble_size"] = spec.size().get_str();
      run["suites"] = json::object();
      for (const auto& [suite, n] : total.checked)
        run["suites"][suite] = json{{"checked", n}, {"failed", total.failed[suite]}};
      run["failures"] = total.failures;
      run["passed"] = ok;
      report["runs"].push_back(run);
    }
    report["passed"] = all_ok;
    CommandResult result{all_ok ? kOk : kVerificationFailed, "", ""};
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (config.timing) report["runtime_seconds"] = format_double(seconds);
    result.output = dump(report);
    result.diagnostics = std::string(all_ok ? "all identity suites passed" : "verification FAILED") +
                         " (" + format_double(seconds, 4) + " s)\n";
    return result;
  });
}

// --- moment ----------------------------------------------------------------------

CommandResult cmd_moment(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    validate(config);
    PolyRing ring(config.q);
    const unsigned cutoff = config.cutoff ? config.cutoff : default_cutoff(config.q);
    const EulerConstants constants = euler_constants(config.q, cutoff);
    const unsigned g_hi = config.g_max.value_or(config.g);
    std::vector<Row> rows;
    std::string diagnostics;
    Checkpoint checkpoint(config.checkpoint, "moment", config);

    for (unsigned g = config.g; g <= g_hi; ++g) {
      const auto start = std::chrono::steady_clock::now();
      const EnsembleSpec spec = checked_spec(config, g);
      IrreducibleTable table(ring, g);
      CharacterSumEngine engine(table, g, kEngineBudget);
      const HighPrec main = moment_main_term(g, constants).value;

      Row row;
      row["q"] = std::to_string(config.q);
      row["g"] = std::to_string(g);
      row["ensemble_size"] = spec.size().get_str();
      row["main_term"] = format_decimal(main, 20);
      row["cutoff"] = std::to_string(cutoff);
      row["tail_bound"] = format_decimal(constants.tail_bound, 6);

      if (config.mode == Mode::exhaustive) {
        row["mode"] = "exhaustive";
        ScanOptions options;
        options.threads = config.threads;
        const unsigned k = effective_prefix_digits(spec, options);
        MomentAccumulator restored(config.q, g);
        options.done.assign(checked_pow(config.q, k), false);
        for (const auto& [part, payload] : checkpoint.partitions(g, k)) {
          restored.merge(accumulator_from_json(payload, config.q, g));
          options.done.at(part) = true;
        }
        StopControl stop;
        stop.budget = config.stop_after;
        options.on_partition = [&](std::uint64_t part, const MomentAccumulator& acc) {
          checkpoint.record(g, k, part, accumulator_to_json(acc));
          ++stop.finished;
        };
        options.stop = std::cref(stop);
        MomentAccumulator acc;
        try {
          acc = first_moment(engine, spec, options);
        } catch (const ScanInterrupted&) {
          return {kInterrupted, "", interrupted_message(config)};
        }
        acc.merge(restored);
        const SqrtQRational total = acc.total();
        const HighPrec value = high_prec(total);
        row["moment_a"] = total.a().get_str();
        row["moment_b"] = total.b().get_str();
        row["moment"] = format_decimal(value, 20);
        row["ratio"] = format_decimal(value / main, 17);
        row["square_part_a"] = acc.square_part().a().get_str();
        row["square_part_b"] = acc.square_part().b().get_str();
        row["nonsquare_part_a"] = acc.nonsquare_part().a().get_str();
        row["nonsquare_part_b"] = acc.nonsquare_part().b().get_str();
      } else {
        row["mode"] = "sample";
        row["samples"] = std::to_string(config.sample_size);
        row["seed"] = std::to_string(*config.seed);
        const auto est = sample_moment(engine, spec, config.sample_size, *config.seed, config.threads);
        const double size = spec.size().get_d();
        row["moment"] = format_double(est.estimated_total);
        row["moment_stderr"] = format_double(est.standard_error * size);
        row["ratio"] = format_double(static_cast<double>(HighPrec(est.estimated_total) / main));
      }
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (config.timing) row["runtime_seconds"] = format_double(seconds);
      diagnostics += "g=" + std::to_string(g) + ": " + format_double(seconds, 4) + " s\n";
      rows.push_back(std::move(row));
    }
    return {kOk, render_moment(rows, config.format), diagnostics};
  });
}

// --- small commands --------------------------------------------------------------

CommandResult cmd_constants(std::uint32_t q, unsigned cutoff) {
  return guarded([&]() -> CommandResult {
    FieldSpec check(q);
    (void)check;
    if (cutoff == 0) cutoff = default_cutoff(q);
    const auto c = euler_constants(q, cutoff);
    json j;
    j["q"] = q;
    j["cutoff"] = cutoff;
    j["P1"] = format_decimal(c.P1, 30);
    j["logderiv"] = format_decimal(c.logderiv, 30);
    j["tail_bound"] = format_decimal(c.tail_bound, 6);
    j["logderiv_tail_bound"] = format_decimal(c.logderiv_tail_bound, 6);
    j["zetaA2"] = zeta_A(q, 2).get_str();
    return {kOk, dump(j), ""};
  });
}

CommandResult cmd_lpoly(const std::string& text, std::uint32_t q) {
  return guarded([&]() -> CommandResult {
    PolyRing ring(q);
    const Poly D = parse_poly(text, ring);
    const auto L = l_polynomial(D, ring);
    json j;
    j["D"] = poly_json(D);
    j["q"] = q;
    j["coeffs"] = bigints_json(L.coeffs);
    j["lambda"] = L.lambda;
    return {kOk, dump(j), ""};
  });
}

CommandResult cmd_symbol(const std::string& f_text, const std::string& Q_text, std::uint32_t q) {
  return guarded([&]() -> CommandResult {
    PolyRing ring(q);
    const Poly f = parse_poly(f_text, ring);
    const Poly Q = parse_poly(Q_text, ring);
    const int value = jacobi(f, Q, ring);
    json j;
    j["f"] = poly_json(f);
    j["Q"] = poly_json(Q);
    j["q"] = q;
    j["symbol"] = value;
    // second algorithm when the sieve needed to factor Q is small
    unsigned cutoff = std::max(1, Q.degree() / 2);
    if (checked_pow(q, std::min(cutoff, 30u)) <= (1u << 22) && cutoff <= 30) {
      IrreducibleTable table(ring, cutoff);
      const int by_factorization = jacobi_by_factorization(f, Q, table);
      j["by_factorization"] = by_factorization;
      if (by_factorization != value)
        return {kVerificationFailed, dump(j), "error: Jacobi algorithms disagree\n"};
    } else {
      j["by_factorization"] = nullptr;
    }
    return {kOk, dump(j), ""};
  });
}

CommandResult cmd_oracle(const std::string& text, std::uint32_t q) {
  return guarded([&]() -> CommandResult {
    PolyRing ring(q);
    const Poly D = parse_poly(text, ring);
    const auto L = l_polynomial(D, ring);
    const auto Z = zeta_numerator(D, ring);
    const auto ps = power_sums(D, ring);
    json j;
    j["D"] = poly_json(D);
    j["q"] = q;
    j["g"] = (D.degree() - 1) / 2;
    j["point_counts"] = bigints_json(ps.N);
    j["l_polynomial"] = bigints_json(L.coeffs);
    j["zeta_numerator"] = bigints_json(Z.coeffs);
    const bool match = Z.coeffs == L.coeffs;
    j["match"] = match;
    return {match ? kOk : kVerificationFailed, dump(j), match ? "" : "error: oracle mismatch\n"};
  });
}

}  // namespace ffl::cli
