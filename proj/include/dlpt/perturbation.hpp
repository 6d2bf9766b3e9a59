#pragma once

// Operator form of non-degenerate Rayleigh-Schrodinger perturbation theory.
//
// For H = H0 + lambda*h with H0 diagonal, the perturbed states are written as
// |Psi_n(lambda)> = exp(lambda*F + lambda^2*G + ...)|n>, with F and G the same
// for every n. F solves [F, H0] = h_ND, G solves the second-order commutator
// condition, and the energy corrections through third order are diagonal
// matrix elements of commutators and products of F and h.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "dlpt/matrix_exponential.hpp"
#include "dlpt/operator_matrix.hpp"

namespace dlpt {

struct PerturbationProblem {
  PerturbationProblem(Spectrum unperturbed, OperatorMatrix perturbation, double coupling = 1.0)
      : h0(std::move(unperturbed)), h(std::move(perturbation)), lambda(coupling) {
    require_same_dim(h.dim(), h0.size(), "perturbation vs spectrum");
    if (!h.is_symmetric()) throw InvalidArgument("perturbation must be flagged symmetric");
    if (!std::isfinite(lambda)) throw InvalidArgument("coupling must be finite");
  }

  std::size_t dim() const noexcept { return h0.size(); }

  Spectrum h0;
  OperatorMatrix h;
  double lambda;
};

/// E_n(lambda) = eps0 + lambda eps1 + lambda^2 eps2 + lambda^3 eps3.
struct EnergyExpansion {
  Spectrum eps0;
  std::vector<double> eps1;
  std::vector<double> eps2;
  std::vector<double> eps3;

  EnergyExpansion(Spectrum e0, std::vector<double> e1, std::vector<double> e2,
                  std::vector<double> e3)
      : eps0(std::move(e0)), eps1(std::move(e1)), eps2(std::move(e2)), eps3(std::move(e3)) {
    const std::size_t n = eps0.size();
    if (eps1.size() != n || eps2.size() != n || eps3.size() != n) {
      throw DimensionMismatch("energy expansion lists must have equal length");
    }
  }

  std::size_t size() const noexcept { return eps0.size(); }

  /// Partial sum through `order` (0..3).
  double evaluate(std::size_t n, double lambda, int order = 3) const {
    double e = eps0[n];
    if (order >= 1) e += lambda * eps1[n];
    if (order >= 2) e += lambda * lambda * eps2[n];
    if (order >= 3) e += lambda * lambda * lambda * eps3[n];
    return e;
  }
};

/// The generators F and G of S(lambda) = exp(lambda F + lambda^2 G).
struct WaveOperator {
  OperatorMatrix f;
  OperatorMatrix g;

  std::size_t dim() const noexcept { return f.dim(); }
};

/// (h_D, h_ND): the diagonal part and the rest. h_D + h_ND == h bitwise.
inline std::pair<OperatorMatrix, OperatorMatrix> split_diagonal(const OperatorMatrix& h) {
  Matrix diag = h.matrix().diagonal().asDiagonal();
  Matrix off = h.matrix();
  off.diagonal().setZero();
  return {OperatorMatrix(std::move(diag), Symmetry::symmetric), OperatorMatrix(std::move(off), h.symmetry())};
}

inline std::vector<double> first_order_corrections(const PerturbationProblem& p) {
  std::vector<double> eps1(p.dim());
  for (std::size_t n = 0; n < p.dim(); ++n) eps1[n] = p.h(n, n);
  return eps1;
}

namespace detail {

inline void require_matching_f(const PerturbationProblem& p, const OperatorMatrix& f) {
  require_same_dim(f.dim(), p.dim(), "F operator vs problem");
}

// 1 / (eps_col - eps_row) off the diagonal, 0 on it.
inline Matrix inverse_gaps(const Spectrum& h0) {
  const auto dim = static_cast<Eigen::Index>(h0.size());
  Matrix inv = Matrix::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      if (m != n) inv(m, n) = 1.0 / (h0[n] - h0[m]);
    }
  }
  return inv;
}

}  // namespace detail

/// F[m][n] = h[m][n] / (eps_n - eps_m), zero diagonal.
inline OperatorMatrix build_f_operator(const PerturbationProblem& p) {
  Matrix f = p.h.matrix().cwiseProduct(detail::inverse_gaps(p.h0));
  f.diagonal().setZero();
  return OperatorMatrix(std::move(f));
}

/// eps2[n] = -1/2 <n|[F, h_ND]|n>
inline std::vector<double> second_order_corrections(const PerturbationProblem& p,
                                                    const OperatorMatrix& f) {
  detail::require_matching_f(p, f);
  const auto [h_d, h_nd] = split_diagonal(p.h);
  const Matrix c = commutator(f.matrix(), h_nd.matrix());
  std::vector<double> eps2(p.dim());
  for (std::size_t n = 0; n < p.dim(); ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    eps2[n] = -0.5 * c(i, i);
  }
  return eps2;
}

/// Off-diagonal G from the second-order commutator condition; zero diagonal.
inline OperatorMatrix build_g_operator(const PerturbationProblem& p, const OperatorMatrix& f) {
  detail::require_matching_f(p, f);
  const auto [h_d, h_nd] = split_diagonal(p.h);
  const Matrix c = commutator(f.matrix(), h_nd.matrix());
  const Matrix inv = detail::inverse_gaps(p.h0);
  const auto dim = static_cast<Eigen::Index>(p.dim());
  Matrix g = Matrix::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      if (m == n) continue;
      const double d1 = p.h.matrix()(n, n) - p.h.matrix()(m, m);
      g(m, n) = -d1 * inv(m, n) * f.matrix()(m, n) - 0.5 * inv(m, n) * c(m, n);
    }
  }
  return OperatorMatrix(std::move(g));
}

/// eps3[n] = <n| (F^2 h_D + h_D F^2)/2 - F h F |n>
inline std::vector<double> third_order_corrections(const PerturbationProblem& p,
                                                   const OperatorMatrix& f) {
  detail::require_matching_f(p, f);
  const auto [h_d, h_nd] = split_diagonal(p.h);
  const Matrix& fm = f.matrix();
  const Matrix f2 = fm * fm;
  const Matrix op = 0.5 * (f2 * h_d.matrix() + h_d.matrix() * f2) - fm * p.h.matrix() * fm;
  std::vector<double> eps3(p.dim());
  for (std::size_t n = 0; n < p.dim(); ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    eps3[n] = op(i, i);
  }
  return eps3;
}

/// exp(lambda F + lambda^2 G) e_n
inline Vector apply_wave_operator(const WaveOperator& w, double lambda, std::size_t n) {
  if (n >= w.dim()) throw InvalidArgument("state index out of range");
  if (lambda == 0.0) return basis_vector(w.dim(), n);
  const Matrix generator = lambda * w.f.matrix() + (lambda * lambda) * w.g.matrix();
  return matrix_exponential(generator).col(static_cast<Eigen::Index>(n));
}

/// ||(H0 + lambda h) Psi - E(n, lambda) Psi|| / ||Psi|| with Psi = S(lambda)|n>.
inline double eigenvalue_residual(const PerturbationProblem& p, const WaveOperator& w,
                                  const EnergyExpansion& e, std::size_t n) {
  require_same_dim(w.dim(), p.dim(), "wave operator vs problem");
  require_same_dim(e.size(), p.dim(), "energy expansion vs problem");
  const Vector psi = apply_wave_operator(w, p.lambda, n);
  const Matrix hamiltonian = p.h0.as_matrix() + p.lambda * p.h.matrix();
  const Vector r = hamiltonian * psi - e.evaluate(n, p.lambda) * psi;
  return r.norm() / psi.norm();
}

struct PerturbativeSolution {
  WaveOperator wave;
  EnergyExpansion energies;
};

/// Everything the operator construction produces for one problem.
inline PerturbativeSolution solve(const PerturbationProblem& p) {
  OperatorMatrix f = build_f_operator(p);
  OperatorMatrix g = build_g_operator(p, f);
  auto eps1 = first_order_corrections(p);
  auto eps2 = second_order_corrections(p, f);
  auto eps3 = third_order_corrections(p, f);
  return {WaveOperator{std::move(f), std::move(g)},
          EnergyExpansion(p.h0, std::move(eps1), std::move(eps2), std::move(eps3))};
}

}  // namespace dlpt
