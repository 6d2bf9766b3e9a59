#pragma once

// Deep three-dimensional wells V(r^2) = -V0 (1 - alpha r^2 + beta r^4).
//
// H0 = p^2/2mu + alpha V0 r^2 - V0 is the 3-D oscillator with
// hbar omega = sqrt(2) V0 delta, diagonal in |k, m> with eigenvalue
// -V0 + 2 hbar omega m. The perturbation is h = -V0 beta r^4 at lambda = 1.
//
// Each perturbative order picks up exactly one more power of delta
// (h ~ V0 delta^2, level spacings ~ V0 delta), so in units of V0
//
//   E_m / V0 = -1 + e1 delta + e2 delta^2 + e3 delta^3 + e4 delta^4 + ...
//
// with e1 from H0, e2 from first order, e3 from second order, e4 from third.
// Closed forms, with q = beta / alpha^2 and C2 = k(k-1):
//
//   e1 = 2 sqrt(2) m
//   e2 = q (C2 - 3 m^2)
//   e3 = sqrt(2) q^2 (9/4 m C2 - 17/4 m^3 - 5/8 m)

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "dlpt/model.hpp"
#include "dlpt/perturbation.hpp"
#include "dlpt/su11.hpp"

namespace dlpt {

inline constexpr std::size_t default_dim = 40;
inline constexpr std::size_t truncation_padding = 10;

namespace closed_form {

inline double harmonic(double m) { return 2.0 * std::numbers::sqrt2 * m; }

inline double quadratic(double m, double c2, double q) { return q * (c2 - 3.0 * m * m); }

inline double cubic(double m, double c2, double q) {
  return std::numbers::sqrt2 * q * q * (2.25 * m * c2 - 4.25 * m * m * m - 0.625 * m);
}

}  // namespace closed_form

/// H0 and h in units of V0 (natural units, hbar = mu = V0 = 1), lambda = 1.
inline PerturbationProblem assemble_problem(const DeepPotentialModel& model, std::size_t dim) {
  if (dim < 8) throw InvalidArgument("deep-potential problems need dim >= 8");
  const DeepPotentialModel nat = model.natural_units();
  const auto ladders = su11::build_ladders(su11::basis_from_angular_momentum(nat.l, dim));
  const double hbar_omega = nat.hbar * nat.omega();
  std::vector<double> levels(dim);
  for (std::size_t i = 0; i < dim; ++i) levels[i] = -nat.v0 + 2.0 * hbar_omega * ladders.basis.m(i);
  return PerturbationProblem(Spectrum(std::move(levels)), su11::build_h_matrix(ladders, nat), 1.0);
}

struct BandEntry {
  int n_r = 0;     // radial index, m = k + n_r
  double m = 0.0;  // K0 eigenvalue
  double c2 = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double e4 = 0.0;  // third perturbative order, beyond the delta^3 truncation
};

struct BandSpectrum {
  int l = 0;
  double delta = 0.0;
  double quartic_ratio = 0.0;
  std::vector<BandEntry> entries;

  /// E/V0 through delta^3.
  double evaluate(std::size_t i, double d) const {
    const auto& e = entries.at(i);
    return e.e0 + d * (e.e1 + d * (e.e2 + d * e.e3));
  }
  double evaluate(std::size_t i) const { return evaluate(i, delta); }
};

/// Expansion coefficients for the lowest n_states levels at fixed l.
/// Requires n_states <= dim - 10 so the truncation edge cannot reach them.
inline BandSpectrum band_spectrum(const DeepPotentialModel& model, std::size_t n_states,
                                  std::size_t dim = default_dim) {
  if (n_states == 0) throw InvalidArgument("need at least one state");
  if (dim < n_states + truncation_padding) {
    throw InvalidArgument("dim must exceed the number of states by at least 10");
  }
  const PerturbationProblem p = assemble_problem(model, dim);
  const PerturbativeSolution sol = solve(p);
  const su11::Basis basis = su11::basis_from_angular_momentum(model.l, dim);
  const double d = model.delta();

  BandSpectrum out;
  out.l = model.l;
  out.delta = d;
  out.quartic_ratio = model.quartic_ratio();
  out.entries.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    BandEntry e;
    e.n_r = static_cast<int>(i);
    e.m = basis.m(i);
    e.c2 = basis.casimir();
    e.e0 = -1.0;
    e.e1 = (p.h0[i] + 1.0) / d;
    e.e2 = sol.energies.eps1[i] / (d * d);
    e.e3 = sol.energies.eps2[i] / (d * d * d);
    e.e4 = sol.energies.eps3[i] / (d * d * d * d);
    out.entries.push_back(e);
  }
  return out;
}

struct BandFit {
  int n_r = 0;
  double c2_coefficient = 0.0;  // rotational term, coefficient of C2 in e2
  double m_coefficient = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

struct RotationalBandReport {
  std::vector<int> ls;
  double delta = 0.0;
  double quartic_ratio = 0.0;
  std::vector<BandFit> bands;
};

/// Separates the C2 (rotational) dependence of e2 at fixed radial index.
///
/// At fixed n_r, m = k + n_r moves with l, so e2 is fitted as
/// a + b m + c C2 across l. Three distinct l values are needed to separate
/// the C2 term from the linear m drift.
inline RotationalBandReport rotational_band_report(std::span<const BandSpectrum> spectra) {
  if (spectra.size() < 3) {
    throw InvalidArgument("rotational band fit needs at least three angular momenta");
  }
  RotationalBandReport out;
  out.delta = spectra.front().delta;
  out.quartic_ratio = spectra.front().quartic_ratio;
  std::size_t levels = spectra.front().entries.size();
  for (const auto& s : spectra) {
    if (std::find(out.ls.begin(), out.ls.end(), s.l) != out.ls.end()) {
      throw InvalidArgument("duplicate angular momentum in band report");
    }
    if (std::abs(s.delta - out.delta) > 1e-12 * out.delta ||
        std::abs(s.quartic_ratio - out.quartic_ratio) > 1e-12 * std::max(1.0, std::abs(out.quartic_ratio))) {
      throw InvalidArgument("band spectra must share delta and beta/alpha^2");
    }
    out.ls.push_back(s.l);
    levels = std::min(levels, s.entries.size());
  }

  const auto rows = static_cast<Eigen::Index>(spectra.size());
  for (std::size_t i = 0; i < levels; ++i) {
    Matrix design(rows, 3);
    Vector rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& e = spectra[static_cast<std::size_t>(r)].entries[i];
      design(r, 0) = 1.0;
      design(r, 1) = e.m;
      design(r, 2) = e.c2;
      rhs(r) = e.e2;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(design);
    const Vector coef = qr.solve(rhs);
    BandFit fit;
    fit.n_r = static_cast<int>(i);
    fit.intercept = coef(0);
    fit.m_coefficient = coef(1);
    fit.c2_coefficient = coef(2);
    fit.max_residual = (design * coef - rhs).cwiseAbs().maxCoeff();
    out.bands.push_back(fit);
  }
  return out;
}

}  // namespace dlpt
