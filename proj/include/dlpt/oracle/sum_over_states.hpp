#pragma once

// Textbook Rayleigh-Schrodinger sums, written as explicit loops over states
// so they share no code with the commutator construction.

#include <cstddef>
#include <vector>

#include "dlpt/perturbation.hpp"

namespace dlpt::oracle {

struct Corrections {
  std::vector<double> eps1;
  std::vector<double> eps2;
  std::vector<double> eps3;
};

inline Corrections sum_over_states_corrections(const PerturbationProblem& p) {
  const std::size_t dim = p.dim();
  Corrections out;
  out.eps1.assign(dim, 0.0);
  out.eps2.assign(dim, 0.0);
  out.eps3.assign(dim, 0.0);
  const auto& e = p.h0;
  const auto& h = p.h;
  for (std::size_t n = 0; n < dim; ++n) {
    out.eps1[n] = h(n, n);
    double second = 0.0;
    double renorm = 0.0;
    for (std::size_t m = 0; m < dim; ++m) {
      if (m == n) continue;
      const double gap = e[n] - e[m];
      second += h(n, m) * h(n, m) / gap;
      renorm += h(n, m) * h(n, m) / (gap * gap);
    }
    double third = 0.0;
    for (std::size_t m = 0; m < dim; ++m) {
      if (m == n) continue;
      for (std::size_t l = 0; l < dim; ++l) {
        if (l == n) continue;
        third += h(n, m) * h(m, l) * h(l, n) / ((e[n] - e[m]) * (e[n] - e[l]));
      }
    }
    out.eps2[n] = second;
    out.eps3[n] = third - out.eps1[n] * renorm;
  }
  return out;
}

}  // namespace dlpt::oracle
