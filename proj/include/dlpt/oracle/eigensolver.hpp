#pragma once

// Cyclic Jacobi eigensolver for dense real symmetric matrices. Self-contained:
// the only thing borrowed from Eigen is storage.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "dlpt/operator_matrix.hpp"

namespace dlpt::oracle {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i pairs with values[i]
};

namespace detail {

// A <- J^T A J and V <- V J for the rotation that zeroes A(p, q).
inline void jacobi_rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

inline double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Eigenvalues ascending, orthonormal eigenvectors as columns. Each vector's
/// largest-magnitude component is made positive.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// 1e-13 * ||A||_F. Throws InvalidArgument for non-symmetric input.
inline EigenDecomposition diagonalize_symmetric(const Matrix& input) {
  if (input.rows() != input.cols()) throw DimensionMismatch("matrix must be square");
  if (max_abs(input - input.transpose()) > 1e-12 * std::max(1.0, max_abs(input))) {
    throw InvalidArgument("diagonalize_symmetric: input is not symmetric");
  }
  const Eigen::Index n = input.rows();
  Matrix a = 0.5 * (input + input.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double target = 1e-13 * a.norm();

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = detail::off_diagonal_norm(a);
    if (off <= target) break;
    // Early sweeps skip rotations far below the current average off-diagonal size.
    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0 || std::abs(a(p, q)) <= threshold) continue;
        detail::jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values[static_cast<std::size_t>(i)] = a(src, src);
    Vector col = v.col(src);
    Eigen::Index peak = 0;
    col.cwiseAbs().maxCoeff(&peak);
    if (col(peak) < 0.0) col = -col;
    out.vectors.col(i) = col;
  }
  return out;
}

inline EigenDecomposition diagonalize_symmetric(const OperatorMatrix& a) {
  return diagonalize_symmetric(a.matrix());
}

}  // namespace dlpt::oracle
