// Evans-function evaluation from the scaled trajectory, sign-change root
// scanning, and the exact-seeded unscaled Wronskian for the closed-form
// oracle problems.
#pragma once

#include <string>
#include <vector>

#include "mtk/integrator.hpp"

namespace mtk {

struct EvansSample {
  double lambda = 0;
  double D = 0;                         // headline value (transformed pairing)
  double D_transformed = 0;             // endpoint paired with the stable form
  double D_proportional = 0;            // raw endpoint paired with the stable
                                        // 2-form of K (equal in exact arithmetic)
  double proportionality_residual = 0;  // misalignment of U(L) from zeta+
  std::string method = "transformed";
};

// D(lambda) up to a fixed nonzero constant: the endpoint of the scaled
// transformed run paired with the stable coordinate form, so D vanishes
// exactly at eigenvalues.  L = 0 selects the catalog default.
EvansSample evans_at(const SpectralProblem& problem, double lambda,
                     double L = 0, double dx = 0.01);

// Wronskian det[u+ u-] at x = 0 from unscaled half-line integrations seeded
// with the catalog's closed-form solutions; matches the analytic Evans
// formulas with constant 1 (n = 1 oracle problems only).
double evans_analytic(const SpectralProblem& problem, double lambda,
                      double L = 0, double dx = 0.001);

struct EvansRoots {
  std::vector<double> roots;                 // bisected to width 1e-8
  std::vector<double> degenerate_candidates; // |D| dips without sign change
};

// Sign-change scan of D over [lo, hi] on a grid_n-point grid.
EvansRoots evans_roots(const SpectralProblem& problem, double lo, double hi,
                       int grid_n, double L = 0, double dx = 0.01);

// Near-eigenvalue guard: |D| below 1e-6 of the grid's dynamic range.
bool near_eigenvalue(double D, double dynamic_range);

}  // namespace mtk
