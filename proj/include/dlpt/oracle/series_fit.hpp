#pragma once

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dlpt/operator_matrix.hpp"

namespace dlpt::oracle {

struct SeriesSample {
  double lambda;
  double value;
};

/// Least-squares coefficients c_0..c_order of sum_j c_j lambda^j.
///
/// Columns are built in lambda / max|lambda| to keep the design matrix
/// well conditioned. Needs at least order + 2 samples.
inline std::vector<double> fit_series_coefficients(std::span<const SeriesSample> samples, int order) {
  if (order < 0) throw InvalidArgument("fit order must be non-negative");
  const auto cols = static_cast<Eigen::Index>(order) + 1;
  if (static_cast<Eigen::Index>(samples.size()) < cols + 1) {
    throw InvalidArgument("need at least order + 2 samples");
  }
  double scale = 0.0;
  for (const auto& s : samples) {
    if (!std::isfinite(s.lambda) || !std::isfinite(s.value)) {
      throw InvalidArgument("non-finite sample");
    }
    scale = std::max(scale, std::abs(s.lambda));
  }
  if (scale == 0.0) scale = 1.0;

  const auto rows = static_cast<Eigen::Index>(samples.size());
  Matrix design(rows, cols);
  Vector rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    double x = 1.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      design(i, j) = x;
      x *= s.lambda / scale;
    }
    rhs(i) = s.value;
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < cols) throw RankDeficientFit("series fit is rank deficient");
  const Vector scaled = qr.solve(rhs);

  std::vector<double> coeffs(static_cast<std::size_t>(cols));
  double unscale = 1.0;
  for (Eigen::Index j = 0; j < cols; ++j) {
    coeffs[static_cast<std::size_t>(j)] = scaled(j) / unscale;
    unscale *= scale;
  }
  return coeffs;
}

/// n points geometrically spaced from lo to hi inclusive.
inline std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2) throw InvalidArgument("invalid geometric grid");
  std::vector<double> out(n);
  const double ratio = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo * std::exp(ratio * static_cast<double>(i));
  out.back() = hi;
  return out;
}

}  // namespace dlpt::oracle
