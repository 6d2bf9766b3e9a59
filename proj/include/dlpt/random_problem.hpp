#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dlpt/perturbation.hpp"

namespace dlpt {

/// Ascending spectrum with adjacent gaps drawn from [min_gap, min_gap + 1]
/// and a symmetric perturbation with entries uniform in [-max_entry, max_entry].
inline PerturbationProblem random_problem(std::mt19937_64& rng, std::size_t dim,
                                          double min_gap = 0.5, double max_entry = 1.0,
                                          double lambda = 1.0) {
  std::uniform_real_distribution<double> gap(min_gap, min_gap + 1.0);
  std::uniform_real_distribution<double> entry(-max_entry, max_entry);
  std::vector<double> levels(dim);
  double level = 0.0;
  for (auto& v : levels) {
    v = level;
    level += gap(rng);
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      h(i, j) = entry(rng);
      h(j, i) = h(i, j);
    }
  }
  return PerturbationProblem(Spectrum(std::move(levels)), OperatorMatrix(std::move(h), Symmetry::symmetric),
                             lambda);
}

inline std::size_t random_dim(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace dlpt
