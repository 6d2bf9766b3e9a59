#pragma once

// Truncated positive-discrete-series representation of su(1,1) in the
// |k, m> ladder basis, m = k, k+1, ..., k+D-1.
//
// Products of generators are exact only away from the truncation edge. Rows
// and columns 2 <= i <= D-3 ("interior") reproduce the infinite-dimensional
// algebra for every identity checked here.

#include <cmath>
#include <cstddef>
#include <utility>

#include "dlpt/model.hpp"
#include "dlpt/operator_matrix.hpp"

namespace dlpt::su11 {

class Basis {
 public:
  Basis(double k, std::size_t dim) : k_(k), dim_(dim) {
    if (!(std::isfinite(k) && k > 0.5)) throw InvalidArgument("Bargmann index must exceed 1/2");
    if (dim < 4) throw InvalidArgument("ladder basis needs at least 4 states");
  }

  double k() const noexcept { return k_; }
  std::size_t dim() const noexcept { return dim_; }
  double m(std::size_t i) const noexcept { return k_ + static_cast<double>(i); }
  double casimir() const noexcept { return k_ * (k_ - 1.0); }

  /// First and last interior index.
  std::size_t interior_begin() const noexcept { return 2; }
  std::size_t interior_end() const noexcept { return dim_ - 3; }

 private:
  double k_;
  std::size_t dim_;
};

/// k = (l + 3/2) / 2
inline Basis basis_from_angular_momentum(int l, std::size_t dim) {
  if (l < 0) throw InvalidArgument("angular momentum must be non-negative");
  return Basis((static_cast<double>(l) + 1.5) / 2.0, dim);
}

struct LadderMatrices {
  Basis basis;
  Matrix k0;
  Matrix kplus;
  Matrix kminus;
};

/// K0 |k,m> = m |k,m>,  K+ |k,m> = sqrt((m+k)(m-k+1)) |k,m+1>,  K- = K+^T.
inline LadderMatrices build_ladders(const Basis& b) {
  const auto d = static_cast<Eigen::Index>(b.dim());
  Matrix k0 = Matrix::Zero(d, d);
  Matrix kp = Matrix::Zero(d, d);
  const double k = b.k();
  for (Eigen::Index i = 0; i < d; ++i) {
    const double m = b.m(static_cast<std::size_t>(i));
    k0(i, i) = m;
    if (i + 1 < d) kp(i + 1, i) = std::sqrt((m + k) * (m - k + 1.0));
  }
  Matrix km = kp.transpose();
  return {b, std::move(k0), std::move(kp), std::move(km)};
}

/// K0^2 - (K+K- + K-K+)/2
inline OperatorMatrix casimir_matrix(const LadderMatrices& lm) {
  Matrix c = lm.k0 * lm.k0 - 0.5 * (lm.kplus * lm.kminus + lm.kminus * lm.kplus);
  return OperatorMatrix(std::move(c), Symmetry::symmetric);
}

struct AOperators {
  OperatorMatrix aplus;
  OperatorMatrix aminus;
};

/// A+ = K+K0 + K0K+, A- = A+^T.
inline AOperators build_a_operators(const LadderMatrices& lm) {
  Matrix ap = lm.kplus * lm.k0 + lm.k0 * lm.kplus;
  Matrix am = ap.transpose();
  return {OperatorMatrix(std::move(ap)), OperatorMatrix(std::move(am))};
}

/// K+ + K- + 2K0, the ladder form of r^2 in units of hbar/(mu omega).
inline Matrix radial_generator(const LadderMatrices& lm) {
  return lm.kplus + lm.kminus + 2.0 * lm.k0;
}

inline OperatorMatrix build_r_squared(const LadderMatrices& lm, double length_scale) {
  if (!(std::isfinite(length_scale) && length_scale > 0.0)) {
    throw InvalidArgument("length scale must be positive");
  }
  return OperatorMatrix(length_scale * radial_generator(lm), Symmetry::symmetric);
}

/// -V0 beta r^4 = -(hbar^2 beta / 2 mu alpha) (K+ + K- + 2K0)^2, formed by
/// squaring the truncated r^2 matrix. The last row and column miss the
/// coupling out of the basis.
inline OperatorMatrix build_h_matrix(const LadderMatrices& lm, const DeepPotentialModel& model) {
  model.validate();
  const Matrix x = radial_generator(lm);
  const double scale = -(model.hbar * model.hbar * model.beta) / (2.0 * model.mu * model.alpha);
  Matrix h = scale * (x * x);
  // Products of a symmetric matrix can pick up last-bit asymmetry.
  h = 0.5 * (h + h.transpose()).eval();
  return OperatorMatrix(std::move(h), Symmetry::symmetric);
}

/// 2A- - 2A+ + (K-^2 - K+^2)/2, the operator part of the closed-form F.
inline Matrix f_analytic_bracket(const LadderMatrices& lm) {
  const auto a = build_a_operators(lm);
  return 2.0 * a.aminus.matrix() - 2.0 * a.aplus.matrix() +
         0.5 * (lm.kminus * lm.kminus - lm.kplus * lm.kplus);
}

/// Closed-form solution of [F, H0] = h_ND for the quartic perturbation,
///
///   F = -(hbar beta / (4 alpha sqrt(2 alpha mu V0))) [2A- - 2A+ + (K-^2 - K+^2)/2].
///
/// H0 = 2 hbar omega K0 advances by 2 hbar omega per ladder step; the prefactor
/// accounts for that. Halving the level spacing to hbar omega doubles F.
inline OperatorMatrix build_f_analytic(const LadderMatrices& lm, const DeepPotentialModel& model) {
  model.validate();
  const double prefactor =
      -(model.hbar * model.beta) /
      (4.0 * model.alpha * std::sqrt(2.0 * model.alpha * model.mu * model.v0));
  return OperatorMatrix(prefactor * f_analytic_bracket(lm));
}

/// max |a - b| over interior rows and columns.
inline double interior_max_abs_diff(const Basis& b, const Matrix& a, const Matrix& other) {
  const auto lo = static_cast<Eigen::Index>(b.interior_begin());
  const auto n = static_cast<Eigen::Index>(b.interior_end()) - lo + 1;
  return (a.block(lo, lo, n, n) - other.block(lo, lo, n, n)).cwiseAbs().maxCoeff();
}

}  // namespace dlpt::su11
