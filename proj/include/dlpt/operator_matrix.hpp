#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dlpt/errors.hpp"

namespace dlpt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest absolute entry, 0 for an empty matrix.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Gaps at or below this are treated as degenerate.
inline double degeneracy_tolerance(std::span<const double> values) {
  if (values.empty()) return 1e-8;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return 1e-8 * std::max(1.0, *hi - *lo);
}

/// Eigenvalues of the unperturbed operator, one per basis state.
///
/// Construction rejects non-finite values and any pair of levels closer than
/// 1e-8 * max(1, spectral range). The order of the values is the basis order;
/// it need not be ascending.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("spectrum must not be empty");
    for (double v : values_) {
      if (!std::isfinite(v)) throw InvalidArgument("spectrum contains a non-finite value");
    }
    std::vector<std::size_t> order(values_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
    const double tol = degeneracy_tolerance(values_);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const double gap = values_[order[i]] - values_[order[i - 1]];
      if (gap <= tol) {
        throw DegenerateSpectrum(std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i]),
                                 gap);
      }
    }
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  /// diag(values) as a dense matrix.
  Matrix as_matrix() const {
    return Eigen::Map<const Vector>(values_.data(), static_cast<Eigen::Index>(values_.size()))
        .asDiagonal();
  }

 private:
  std::vector<double> values_;
};

enum class Symmetry { symmetric, general };

/// Dense real operator in the unperturbed eigenbasis.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;

  explicit OperatorMatrix(Matrix entries, Symmetry symmetry = Symmetry::general)
      : entries_(std::move(entries)), symmetry_(symmetry) {
    if (entries_.rows() != entries_.cols()) {
      throw DimensionMismatch("operator matrix must be square");
    }
    if (!entries_.allFinite()) throw InvalidArgument("operator matrix contains non-finite entries");
    if (symmetry_ == Symmetry::symmetric) {
      const double tol = 1e-12 * std::max(1.0, max_abs(entries_));
      if (max_abs(entries_ - entries_.transpose()) > tol) {
        throw InvalidArgument("operator matrix flagged symmetric is not symmetric");
      }
    }
  }

  static OperatorMatrix zero(std::size_t dim, Symmetry symmetry = Symmetry::symmetric) {
    const auto n = static_cast<Eigen::Index>(dim);
    return OperatorMatrix(Matrix::Zero(n, n), symmetry);
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  Symmetry symmetry() const noexcept { return symmetry_; }
  bool is_symmetric() const noexcept { return symmetry_ == Symmetry::symmetric; }
  const Matrix& matrix() const noexcept { return entries_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  OperatorMatrix transpose() const { return OperatorMatrix(entries_.transpose(), symmetry_); }

 private:
  Matrix entries_;
  Symmetry symmetry_ = Symmetry::general;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

/// [a, b] = ab - ba
inline OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "commutator");
  return OperatorMatrix(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

/// Standard basis vector e_n.
inline Vector basis_vector(std::size_t dim, std::size_t n) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(n)) = 1.0;
  return v;
}

}  // namespace dlpt
