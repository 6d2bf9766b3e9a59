#pragma once

#include <cmath>
#include <string>

#include "dlpt/errors.hpp"

namespace dlpt {

/// V(r^2) = -V0 (1 - alpha r^2 + beta r^4), kinetic term p^2/2mu.
///
/// beta may have either sign. All other parameters must be positive.
struct DeepPotentialModel {
  double v0 = 1.0;
  double alpha = 1.0;
  double beta = 0.0;
  double mu = 1.0;
  double hbar = 1.0;
  int l = 0;

  void validate() const {
    auto positive = [](double x, const char* name) {
      if (!(std::isfinite(x) && x > 0.0)) {
        throw InvalidArgument(std::string(name) + " must be positive and finite");
      }
    };
    positive(v0, "v0");
    positive(alpha, "alpha");
    positive(mu, "mu");
    positive(hbar, "hbar");
    if (!std::isfinite(beta)) throw InvalidArgument("beta must be finite");
    if (l < 0) throw InvalidArgument("angular momentum must be non-negative");
  }

  /// Oscillator frequency from mu omega^2 / 2 = alpha V0.
  double omega() const { return std::sqrt(2.0 * alpha * v0 / mu); }

  /// hbar sqrt(alpha / (mu V0)), small for deep wells.
  double delta() const { return hbar * std::sqrt(alpha / (mu * v0)); }

  /// beta / alpha^2, dimensionless.
  double quartic_ratio() const { return beta / (alpha * alpha); }

  /// Same physics with hbar = mu = V0 = 1. Energies come out in units of V0 and
  /// only delta and beta/alpha^2 survive.
  DeepPotentialModel natural_units() const {
    validate();
    const double length2 = hbar * hbar / (mu * v0);
    DeepPotentialModel out;
    out.v0 = 1.0;
    out.mu = 1.0;
    out.hbar = 1.0;
    out.alpha = alpha * length2;
    out.beta = beta * length2 * length2;
    out.l = l;
    return out;
  }

  /// Natural-unit model with the given delta and beta/alpha^2.
  static DeepPotentialModel from_dimensionless(double delta, double quartic_ratio, int l = 0) {
    DeepPotentialModel m;
    m.alpha = delta * delta;
    m.beta = quartic_ratio * m.alpha * m.alpha;
    m.l = l;
    m.validate();
    return m;
  }
};

}  // namespace dlpt
