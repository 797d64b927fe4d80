// Spectral data of the constant-coefficient system at infinity: the
// hyperbolic splitting of A_inf(lambda), the scaled-system rates sigma+-,
// the eigen-2-forms zeta+-, and the symplectic change of coordinates K
// with its matrix of 2x2 minors.
#pragma once

#include <Eigen/Dense>

#include "mtk/exterior.hpp"
#include "mtk/problems.hpp"

namespace mtk {

struct InfinityData {
  int n = 1;                     // half-dimension
  Eigen::VectorXcd eigenvalues;  // the 2n eigenvalues of A_inf(lambda)
  double sigma_plus = 0;         // sum of positive-real-part eigenvalues
  double sigma_minus = 0;
  Eigen::VectorXd zeta_plus;   // unit eigen-2-form of A^(2) (2-vector, n = 1)
  Eigen::VectorXd zeta_minus;
  Eigen::MatrixXd K;           // symplectic: unstable columns first
  Mat6 K_minors;               // induced 6x6 matrix of K (n = 2 only)
  Mat6 K_minors_inv;           // induced matrix of K^{-1}
};

// Full hyperbolic data at lambda.  Throws std::domain_error("essential
// spectrum") outside the hyperbolic domain and std::runtime_error
// ("non-hyperbolic within tolerance") when the eigenvalue split fails.
InfinityData infinity_data(const SpectralProblem& problem, double lambda);

// 2n x n real basis of the unstable subspace of A_inf(lambda); its span
// is Lagrangian.
Eigen::MatrixXd unstable_frame(const SpectralProblem& problem, double lambda);

// Closed-form essential-spectrum predicate from the catalog.
bool in_essential_spectrum(const SpectralProblem& problem, double lambda);

// Gap between sigma+ and the next-largest real part among eigenvalue-pair
// sums of A_inf: guards the simple-leading-eigenvalue assumption of the
// scaled integration.
struct SigmaOrderingReport {
  double sigma_plus = 0;
  double gap = 0;              // sigma+ minus the runner-up sum
  bool warn = false;           // gap < 1e-6
  bool degenerate = false;     // A_inf has (near-)repeated eigenvalues
};
SigmaOrderingReport sigma_ordering_check(const SpectralProblem& problem,
                                         double lambda);

}  // namespace mtk
