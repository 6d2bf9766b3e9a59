#include <gtest/gtest.h>

#include <cmath>

#include "dlpt/deep_potential.hpp"
#include "dlpt/su11.hpp"

using namespace dlpt;
using namespace dlpt::su11;

namespace {

double rel_interior(const Basis& b, const Matrix& lhs, const Matrix& rhs) {
  return interior_max_abs_diff(b, lhs, rhs) / std::max({1.0, max_abs(lhs), max_abs(rhs)});
}

}  // namespace

TEST(Basis, FromAngularMomentum) {
  EXPECT_DOUBLE_EQ(basis_from_angular_momentum(0, 10).k(), 0.75);
  EXPECT_DOUBLE_EQ(basis_from_angular_momentum(2, 10).k(), 1.75);
  EXPECT_THROW(basis_from_angular_momentum(0, 3), InvalidArgument);
  EXPECT_THROW(basis_from_angular_momentum(-1, 10), InvalidArgument);
}

TEST(Basis, AcceptsAnyIndexAboveOneHalf) {
  EXPECT_NO_THROW(Basis(0.51, 4));
  EXPECT_THROW(Basis(0.5, 4), InvalidArgument);
  EXPECT_DOUBLE_EQ(Basis(2.3, 10).casimir(), 2.3 * 1.3);
}

TEST(Ladders, Entries) {
  const auto lm = build_ladders(basis_from_angular_momentum(0, 8));
  EXPECT_DOUBLE_EQ(lm.kplus(1, 0), std::sqrt(1.5));
  for (int i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(lm.k0(i, i), 0.75 + i);
  EXPECT_EQ(lm.kminus, lm.kplus.transpose());
  EXPECT_EQ(lm.kminus.col(0).cwiseAbs().maxCoeff(), 0.0);  // lowest weight
  // only the subdiagonal is populated
  Matrix off = lm.kplus;
  for (int i = 0; i + 1 < 8; ++i) off(i + 1, i) = 0.0;
  EXPECT_EQ(max_abs(off), 0.0);
}

TEST(Casimir, InteriorValueMatchesAngularMomentum) {
  for (int l : {0, 1, 2, 5}) {
    const auto b = basis_from_angular_momentum(l, 30);
    const auto lm = build_ladders(b);
    const Matrix c = casimir_matrix(lm).matrix();
    const double expected = l * (l + 1) / 4.0 - 3.0 / 16.0;
    EXPECT_NEAR(b.casimir(), expected, 1e-15);
    EXPECT_LE(rel_interior(b, c, expected * Matrix::Identity(30, 30)), 1e-13);
  }
  EXPECT_DOUBLE_EQ(basis_from_angular_momentum(0, 8).casimir(), -3.0 / 16.0);
  EXPECT_DOUBLE_EQ(basis_from_angular_momentum(1, 8).casimir(), 5.0 / 16.0);
}

TEST(LieAlgebra, InteriorBrackets) {
  for (double k : {0.75, 1.25, 1.75, 2.3}) {
    const Basis b(k, 40);
    const auto lm = build_ladders(b);
    EXPECT_LE(rel_interior(b, commutator(lm.k0, lm.kplus), lm.kplus), 1e-11);
    EXPECT_LE(rel_interior(b, commutator(lm.k0, lm.kminus), -lm.kminus), 1e-11);
    EXPECT_LE(rel_interior(b, commutator(lm.kplus, lm.kminus), -2.0 * lm.k0), 1e-11);
  }
}

TEST(LieAlgebra, TruncationBreaksTheEdge) {
  const Basis b(0.75, 10);
  const auto lm = build_ladders(b);
  const Matrix c = commutator(lm.kplus, lm.kminus) + 2.0 * lm.k0;
  EXPECT_GT(std::abs(c(9, 9)), 1.0);
}

TEST(AOperators, CommutatorIdentities) {
  for (double k : {0.75, 1.25, 1.75, 2.3}) {
    const Basis b(k, 40);
    const auto lm = build_ladders(b);
    const auto a = build_a_operators(lm);
    EXPECT_EQ(a.aminus.matrix(), a.aplus.matrix().transpose());
    const double c2 = b.casimir();
    const Matrix k03 = lm.k0 * lm.k0 * lm.k0;
    EXPECT_LE(rel_interior(b, commutator(a.aplus.matrix(), a.aminus.matrix()),
                           -16.0 * k03 + 8.0 * c2 * lm.k0 - 2.0 * lm.k0),
              1e-11);
    const Matrix kp2 = lm.kplus * lm.kplus;
    const Matrix km2 = lm.kminus * lm.kminus;
    EXPECT_LE(rel_interior(b, commutator(kp2, km2), -2.0 * (4.0 * k03 - 4.0 * c2 * lm.k0 + 2.0 * lm.k0)), 1e-11);
  }
}

TEST(RSquared, DiagonalAndGroundState) {
  const auto lm = build_ladders(basis_from_angular_momentum(0, 12));
  const double scale = 0.37;
  const auto r2 = build_r_squared(lm, scale);
  EXPECT_TRUE(r2.is_symmetric());
  EXPECT_EQ(r2.matrix(), r2.matrix().transpose());
  for (int i = 0; i < 12; ++i) EXPECT_DOUBLE_EQ(r2(i, i), 2.0 * (0.75 + i) * scale);
  // 3-D oscillator ground state <r^2> = (3/2) hbar / (mu omega)
  EXPECT_DOUBLE_EQ(r2(0, 0), 1.5 * scale);
  EXPECT_THROW(build_r_squared(lm, 0.0), InvalidArgument);
}

TEST(HMatrix, StructureAndDiagonal) {
  const auto b = basis_from_angular_momentum(1, 20);
  const auto lm = build_ladders(b);
  DeepPotentialModel model{.v0 = 2.0, .alpha = 0.3, .beta = 0.05, .mu = 1.5, .hbar = 0.8, .l = 1};
  const auto h = build_h_matrix(lm, model);
  EXPECT_EQ(h.matrix(), h.matrix().transpose());
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      if (std::abs(i - j) > 2) {
        EXPECT_EQ(h(i, j), 0.0);
      }
    }
  }
  const double pref = -(model.hbar * model.hbar * model.beta) / (2.0 * model.mu * model.alpha);
  const Matrix expected_diag = pref * (6.0 * lm.k0 * lm.k0 - 2.0 * b.casimir() * Matrix::Identity(20, 20));
  Matrix diag = h.matrix().diagonal().asDiagonal();
  EXPECT_LE(rel_interior(b, diag, expected_diag), 1e-13);

  model.beta = 0.0;
  EXPECT_EQ(max_abs(build_h_matrix(lm, model).matrix()), 0.0);
  model.alpha = -1.0;
  EXPECT_THROW(build_h_matrix(lm, model), InvalidArgument);
}

TEST(HMatrix, ExpandedFormEquivalence) {
  for (double k : {0.75, 1.25, 2.3}) {
    const Basis b(k, 40);
    const auto lm = build_ladders(b);
    const auto a = build_a_operators(lm);
    const Matrix x = radial_generator(lm);
    const Matrix expanded = 6.0 * lm.k0 * lm.k0 - 2.0 * b.casimir() * Matrix::Identity(40, 40) +
                            2.0 * a.aplus.matrix() + 2.0 * a.aminus.matrix() + lm.kplus * lm.kplus +
                            lm.kminus * lm.kminus;
    EXPECT_LE(rel_interior(b, x * x, expanded), 1e-11);
  }
}

TEST(FAnalytic, MatchesGenericConstruction) {
  for (int l : {0, 1, 2}) {
    DeepPotentialModel model{.v0 = 3.0, .alpha = 0.4, .beta = 0.03, .mu = 1.2, .hbar = 0.5, .l = l};
    const auto lm = build_ladders(basis_from_angular_momentum(l, 40));
    const auto closed = build_f_analytic(lm, model);
    EXPECT_EQ(closed.matrix(), -closed.matrix().transpose());

    // Generic F in the same (physical) units: H0 = 2 hbar omega K0.
    std::vector<double> levels;
    for (int i = 0; i < 40; ++i) levels.push_back(2.0 * model.hbar * model.omega() * lm.k0(i, i));
    const PerturbationProblem p(Spectrum(levels), build_h_matrix(lm, model));
    const Matrix generic = build_f_operator(p).matrix();
    EXPECT_LE(interior_max_abs_diff(lm.basis, generic, closed.matrix()) / max_abs(generic), 1e-10);
  }
}

TEST(FAnalytic, ZeroBeta) {
  const auto lm = build_ladders(basis_from_angular_momentum(0, 10));
  EXPECT_EQ(max_abs(build_f_analytic(lm, DeepPotentialModel{}).matrix()), 0.0);
}
