#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "dlpt/operator_matrix.hpp"
#include "dlpt/oracle/eigensolver.hpp"

namespace dlpt::oracle {

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("need matched samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) throw InvalidArgument("log-log slope needs positive samples");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Column of `vectors` with the largest overlap on basis state n.
inline Eigen::Index matching_eigenvector(const EigenDecomposition& d, std::size_t n) {
  Eigen::Index best = 0;
  d.vectors.row(static_cast<Eigen::Index>(n)).cwiseAbs().maxCoeff(&best);
  return best;
}

/// Normalized and flipped so the largest-magnitude component is positive.
inline Vector sign_aligned(const Vector& v) {
  Vector out = v / v.norm();
  Eigen::Index peak = 0;
  out.cwiseAbs().maxCoeff(&peak);
  if (out(peak) < 0.0) out = -out;
  return out;
}

}  // namespace dlpt::oracle
