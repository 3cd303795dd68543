#include <csignal>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ffl/cli/commands.hpp"

namespace {

extern "C" void on_interrupt(int) { ffl::cli::request_stop(); }

int emit(const ffl::cli::CommandResult& result, const std::string& out_path) {
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::trunc);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return ffl::cli::kUsageError;
      }
      out << result.output;
    }
  }
  std::cerr << result.diagnostics;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ffl::cli;
  CLI::App app{"Exact first moments of quadratic Dirichlet L-functions over F_q[x]"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  unsigned g_max = 0;
  std::uint64_t seed = 0, stop_after = 0;
  std::string poly_a, poly_b;

  const std::map<std::string, Mode> modes{{"exhaustive", Mode::exhaustive}, {"sample", Mode::sample}};
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--q", config.q, "odd prime field size")->capture_default_str();
    cmd->add_option("--g", config.g, "genus (first genus with --g-max)")->capture_default_str();
    cmd->add_option("--g-max", g_max, "last genus of a range");
    cmd->add_option("--mode", config.mode, "exhaustive or sample")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    cmd->add_option("--sample-size", config.sample_size, "draws in sample mode")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed (required in sample mode)");
    cmd->add_option("--threads", config.threads, "worker threads")->capture_default_str();
    cmd->add_flag("--force", config.force, "scan even past the size cap");
    cmd->add_option("--size-cap", config.size_cap, "largest exhaustive scan without --force")->capture_default_str();
    cmd->add_option("--checkpoint", config.checkpoint, "resumable state file");
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
    cmd->add_flag("--timing", config.timing, "include wall-clock runtimes");
    cmd->add_option("--stop-after", stop_after)->group("");
  };

  auto* verify = app.add_subcommand("verify", "run the exact identity suites");
  add_run_options(verify);
  verify->add_flag("--inject-fault", config.inject_fault)->group("");

  auto* moment = app.add_subcommand("moment", "first moment, main term and ratio");
  add_run_options(moment);
  moment->add_option("--cutoff", config.cutoff, "Euler-product cutoff N");
  moment->add_option("--format", config.format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* constants = app.add_subcommand("constants", "Euler-product constants");
  constants->add_option("--q", config.q)->capture_default_str();
  constants->add_option("--cutoff", config.cutoff, "Euler-product cutoff N");
  constants->add_option("--out", out_path);

  auto* lpoly = app.add_subcommand("lpoly", "L-polynomial of y^2 = D(x)");
  lpoly->add_option("D", poly_a, "polynomial, e.g. x^3+x+1")->required();
  lpoly->add_option("--q", config.q)->capture_default_str();

  auto* symbol = app.add_subcommand("symbol", "Jacobi symbol (f/Q)");
  symbol->add_option("f", poly_a)->required();
  symbol->add_option("Q", poly_b)->required();
  symbol->add_option("--q", config.q)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "point-count zeta numerator vs character sums");
  oracle->add_option("D", poly_a)->required();
  oracle->add_option("--q", config.q)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  for (auto* cmd : {verify, moment}) {
    if (!cmd->parsed()) continue;
    if (cmd->count("--g-max")) config.g_max = g_max;
    if (cmd->count("--seed")) config.seed = seed;
    if (cmd->count("--stop-after")) config.stop_after = stop_after;
  }

  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);

  if (verify->parsed()) return emit(cmd_verify(config), out_path);
  if (moment->parsed()) return emit(cmd_moment(config), out_path);
  if (constants->parsed()) return emit(cmd_constants(config.q, config.cutoff), out_path);
  if (lpoly->parsed()) return emit(cmd_lpoly(poly_a, config.q), "");
  if (symbol->parsed()) return emit(cmd_symbol(poly_a, poly_b, config.q), "");
  return emit(cmd_oracle(poly_a, config.q), "");
}
