// Fixed-step RK4 integration of the scaled induced system
//   U' = [A^(2)(x, lambda) - sigma+ I] U   on [-L, L]
// (2-vector analogue when n = 1), in raw or K-transformed coordinates,
// with Lagrangian-Grassmannian drift monitoring.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "mtk/asymptotics.hpp"
#include "mtk/problems.hpp"

namespace mtk {

struct Trajectory {
  std::vector<double> xs;                 // -L = x0 < ... < xM = L
  std::vector<Eigen::VectorXd> states;    // 6-vectors (n = 2) or 2-vectors
  double sigma_used = 0;
  int n = 1;
  bool transformed = false;               // K-coordinate run
  // Per-node (|I1|, |I2|) for n = 2 raw-coordinate runs; empty otherwise.
  std::vector<std::pair<double, double>> drift;
};

// Generic classical RK4 over nsteps of size h; returns the path including
// the initial state.
std::vector<Eigen::VectorXd> rk4_path(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& rhs,
    double x0, Eigen::VectorXd u0, double h, int nsteps);

// Scaled run in the raw exterior coordinates, seeded with zeta+ at -L.
Trajectory integrate_scaled(const SpectralProblem& problem, double lambda,
                            double L, double dx);

// Same dynamics in K(lambda)-transformed coordinates, seeded with the
// first coordinate form E1 (e1 for n = 1).
Trajectory integrate_transformed(const SpectralProblem& problem, double lambda,
                                 double L, double dx);

struct DriftReport {
  double max_I1 = 0;
  double max_I2 = 0;
  bool attractivity_ok = true;
};

// Checks the exponential-attractivity envelopes |I1| <= |I1(-L)| e^{-2s(x+L)}
// and |I2| <= |I2(-L)| e^{-s(x+L)} with additive slack 1e-8 (1 + |U|^2).
DriftReport constraint_drift(const Trajectory& t);

// Smallest half-length at which ||B - B_inf|| drops below 1e-12 per the
// catalog decay envelope, capped to [10, 50].
double default_L(const SpectralProblem& problem);

}  // namespace mtk
