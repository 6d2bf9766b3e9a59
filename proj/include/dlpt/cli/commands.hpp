#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlpt/cli/report.hpp"
#include "dlpt/deep_potential.hpp"
#include "dlpt/oracle/eigensolver.hpp"
#include "dlpt/oracle/scaling.hpp"
#include "dlpt/verify.hpp"

namespace dlpt::cli {

enum class Command { verify, spectrum, compare, bands };
enum class Format { csv, json };

inline std::string to_string(Command c) {
  switch (c) {
    case Command::verify: return "verify";
    case Command::spectrum: return "spectrum";
    case Command::compare: return "compare";
    case Command::bands: return "bands";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::verify;
  double v0 = 1.0;
  double alpha = 1.0;
  double beta = 0.0;
  double mu = 1.0;
  double hbar = 1.0;
  int l = 0;
  std::optional<int> l_max;
  std::size_t dim = default_dim;
  std::size_t states = 6;
  Format format = Format::csv;
  std::optional<std::string> out;
  std::uint64_t seed = 42;
  bool inject_degenerate = false;

  DeepPotentialModel model(int ell) const { return {v0, alpha, beta, mu, hbar, ell}; }

  std::vector<int> ls() const {
    std::vector<int> out_ls;
    for (int ell = l; ell <= l_max.value_or(l); ++ell) out_ls.push_back(ell);
    return out_ls;
  }

  /// Throws InvalidArgument for anything a command would reject later.
  void validate() const {
    if (l < 0) throw InvalidArgument("--l must be non-negative");
    if (l_max && *l_max < l) throw InvalidArgument("--l-max must be >= --l");
    model(l).validate();
    if (command == Command::verify) return;
    if (states == 0) throw InvalidArgument("--states must be positive");
    if (dim < 8) throw InvalidArgument("--dim must be at least 8");
    if (dim < states + truncation_padding) {
      throw InvalidArgument("--dim must exceed --states by at least " + std::to_string(truncation_padding));
    }
    if (command == Command::bands && ls().size() < 3) {
      throw InvalidArgument("bands needs at least three angular momenta (--l .. --l-max)");
    }
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["command"] = to_string(command);
    j["v0"] = v0;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["mu"] = mu;
    j["hbar"] = hbar;
    j["l"] = l;
    j["l_max"] = l_max.value_or(l);
    j["dim"] = dim;
    j["states"] = states;
    j["seed"] = seed;
    j["delta"] = model(l).delta();
    j["quartic_ratio"] = model(l).quartic_ratio();
    return j;
  }
};

inline Report cmd_verify(const RunConfig& cfg) {
  Report r;
  r.config = cfg.to_json();
  r.checks = verify::run_all(cfg.seed);
  if (cfg.inject_degenerate) {
    verify::Check c{"injected_degenerate_spectrum", 0.0, 0.0, verify::Bound::at_most, ""};
    try {
      // Levels 1 and 3 coincide.
      Spectrum s({0.0, 1.0, 2.0, 1.0});
      c.detail = "degenerate spectrum was accepted";
      c.measured = 1.0;
    } catch (const DegenerateSpectrum& e) {
      c.detail = "DegenerateSpectrum levels " + std::to_string(e.first()) + " and " + std::to_string(e.second());
      c.measured = 1.0;
    }
    r.checks.push_back(c);
  }
  return r;
}

inline Report cmd_spectrum(const RunConfig& cfg) {
  Report r;
  r.config = cfg.to_json();
  r.rows.columns = {"l", "n_r", "m", "C2", "E0_coeff", "E1_coeff", "E2_coeff", "E3_coeff", "E_over_V0_at_delta"};
  for (int ell : cfg.ls()) {
    const auto band = band_spectrum(cfg.model(ell), cfg.states, cfg.dim);
    for (std::size_t i = 0; i < band.entries.size(); ++i) {
      const auto& e = band.entries[i];
      r.rows.add_row({std::int64_t{ell}, std::int64_t{e.n_r}, e.m, e.c2, e.e0, e.e1, e.e2, e.e3, band.evaluate(i)});
    }
  }
  return r;
}

/// Exact diagonalization of the truncated H0 + h against the expansion,
/// energies in units of V0.
inline Report cmd_compare(const RunConfig& cfg) {
  Report r;
  r.config = cfg.to_json();
  r.rows.columns = {"state", "E_exact", "E_order1", "E_order2", "E_order3", "abs_err_order3", "residual_norm"};
  const auto p = assemble_problem(cfg.model(cfg.l), cfg.dim);
  const auto sol = solve(p);
  const auto exact = oracle::diagonalize_symmetric(Matrix(p.h0.as_matrix() + p.h.matrix()));
  for (std::size_t n = 0; n < cfg.states; ++n) {
    const double e_exact = exact.values[static_cast<std::size_t>(oracle::matching_eigenvector(exact, n))];
    const double e3 = sol.energies.evaluate(n, 1.0, 3);
    r.rows.add_row({static_cast<std::int64_t>(n), e_exact, sol.energies.evaluate(n, 1.0, 1),
                    sol.energies.evaluate(n, 1.0, 2), e3, std::abs(e_exact - e3),
                    eigenvalue_residual(p, sol.wave, sol.energies, n)});
  }
  return r;
}

inline Report cmd_bands(const RunConfig& cfg) {
  Report r;
  r.config = cfg.to_json();
  r.rows.columns = {"n_r", "c2_coefficient", "m_coefficient", "intercept", "fit_residual"};
  std::vector<BandSpectrum> spectra;
  for (int ell : cfg.ls()) spectra.push_back(band_spectrum(cfg.model(ell), cfg.states, cfg.dim));
  const auto report = rotational_band_report(spectra);
  for (const auto& b : report.bands) {
    r.rows.add_row({std::int64_t{b.n_r}, b.c2_coefficient, b.m_coefficient, b.intercept, b.max_residual});
  }
  return r;
}

inline Report run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::verify: return cmd_verify(cfg);
    case Command::spectrum: return cmd_spectrum(cfg);
    case Command::compare: return cmd_compare(cfg);
    case Command::bands: return cmd_bands(cfg);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace dlpt::cli
