#pragma once

#include <cmath>
#include <limits>

#include "dlpt/operator_matrix.hpp"

namespace dlpt {

/// exp(A) by scaling and squaring around a truncated Taylor series.
///
/// A is scaled by 2^-s so that its 1-norm is below 0.5; the Taylor degree is
/// the smallest q whose remainder bound ||B||^(q+1) / (q+1)! * 2 is below a
/// quarter of machine epsilon. A looser cut shows up in small residuals.
inline Matrix matrix_exponential(const Matrix& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DimensionMismatch("matrix_exponential: matrix must be square");
  if (n == 0 || max_abs(a) == 0.0) return Matrix::Identity(n, n);

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  double scaled_norm = norm;
  while (scaled_norm >= 0.5) {
    scaled_norm *= 0.5;
    ++squarings;
  }
  const Matrix b = a * std::ldexp(1.0, -squarings);

  // Remainder of the degree-q series is bounded by 2 * x^(q+1)/(q+1)! for x < 0.5.
  int degree = 1;
  double term = scaled_norm;
  while (2.0 * term * scaled_norm / (degree + 1) >= 0.25 * std::numeric_limits<double>::epsilon() && degree < 30) {
    term *= scaled_norm / (degree + 1);
    ++degree;
  }

  // Horner: I + B(I + B/2(I + B/3(...)))
  Matrix result = Matrix::Identity(n, n);
  for (int k = degree; k >= 1; --k) {
    result = Matrix::Identity(n, n) + (b * result) / static_cast<double>(k);
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace dlpt
