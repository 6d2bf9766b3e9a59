#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dlpt/cli/commands.hpp"

namespace dlpt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_config_error = 2;

/// Full command-line entry point. Flags override values from --config,
/// a flat key=value file.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operator-form perturbation theory for deep 3-D potentials", "dlpt"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.allow_config_extras(false);

  RunConfig cfg;
  int l_max = -1;
  std::string format = "csv";
  std::string out_path;
  app.add_option("--v0", cfg.v0, "well depth V0")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "r^2 coefficient")->capture_default_str();
  app.add_option("--beta", cfg.beta, "r^4 coefficient")->capture_default_str();
  app.add_option("--mu", cfg.mu, "mass")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "reduced Planck constant")->capture_default_str();
  app.add_option("--l", cfg.l, "angular momentum (first of the range)")->capture_default_str();
  app.add_option("--l-max", l_max, "last angular momentum of the range");
  app.add_option("--dim", cfg.dim, "ladder basis dimension")->capture_default_str();
  app.add_option("--states", cfg.states, "number of levels per l")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized verification suites")->capture_default_str();
  app.add_flag("--inject-degenerate", cfg.inject_degenerate)->group("");

  const std::map<std::string, Command> commands{{"verify", Command::verify},
                                                {"spectrum", Command::spectrum},
                                                {"compare", Command::compare},
                                                {"bands", Command::bands}};
  app.add_subcommand("verify", "run every cross-module invariant suite");
  app.add_subcommand("spectrum", "delta-expansion coefficients per level");
  app.add_subcommand("compare", "expansion against exact diagonalization");
  app.add_subcommand("bands", "rotational (C2) coefficient per radial band");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config_error;
  }

  cfg.command = commands.at(app.get_subcommands().front()->get_name());
  if (app.count("--l-max") > 0) cfg.l_max = l_max;
  cfg.format = format == "json" ? Format::json : Format::csv;
  if (!out_path.empty()) cfg.out = out_path;

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_config_error;
  }

  Report report;
  try {
    report = run_command(cfg);
  } catch (const DegenerateSpectrum& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification_failed;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_config_error;
  }

  std::ofstream file;
  if (cfg.out) {
    file.open(*cfg.out);
    if (!file) {
      err << "configuration error: cannot open " << *cfg.out << '\n';
      return exit_config_error;
    }
  }
  std::ostream& sink = cfg.out ? static_cast<std::ostream&>(file) : out;
  if (cfg.format == Format::json) {
    write_json(sink, report);
  } else {
    write_csv(sink, report);
  }

  for (const auto& c : report.checks) {
    if (!c.passed()) err << "FAILED " << c.name << ": " << format_real(c.measured) << " (" << c.detail << ")\n";
  }
  return report.all_passed() ? exit_ok : exit_verification_failed;
}

}  // namespace dlpt::cli
