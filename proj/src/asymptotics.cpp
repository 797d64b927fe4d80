#include "mtk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mtk {

namespace {

// Real basis of the invariant subspace of A with halfsign*Re(mu) > 0.
// Complex pairs contribute (Re v, Im v) once, from the Im(mu) > 0 member.
Eigen::MatrixXd invariant_basis(const Eigen::MatrixXd& A, int halfsign) {
  const int dim = static_cast<int>(A.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A.cast<std::complex<double>>());
  const auto& mu = es.eigenvalues();
  const auto& V = es.eigenvectors();
  for (int i = 0; i < dim; ++i)
    if (std::abs(mu(i).real()) <= 1e-10)
      throw std::runtime_error("non-hyperbolic within tolerance");

  Eigen::MatrixXd W(dim, dim / 2);
  int col = 0;
  for (int i = 0; i < dim && col < dim / 2; ++i) {
    if (halfsign * mu(i).real() <= 0) continue;
    if (std::abs(mu(i).imag()) < 1e-12) {
      W.col(col++) = V.col(i).real();
    } else if (mu(i).imag() > 0) {
      W.col(col++) = V.col(i).real();
      if (col < dim / 2) W.col(col++) = V.col(i).imag();
    }
  }
  if (col != dim / 2) throw std::runtime_error("eigenvalue splitting failure");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(W);
  qr.setThreshold(1e-9);
  if (qr.rank() < dim / 2) {
    // Jordan-chain fallback for a defective repeated real eigenvalue:
    // append a generalized vector (A - mu I) w = v.
    for (int i = 0; i < dim && qr.rank() < dim / 2; ++i) {
      if (halfsign * mu(i).real() <= 0 || std::abs(mu(i).imag()) >= 1e-12)
        continue;
      Eigen::MatrixXd shifted =
          A - mu(i).real() * Eigen::MatrixXd::Identity(dim, dim);
      W.col(dim / 2 - 1) =
          shifted.completeOrthogonalDecomposition().solve(V.col(i).real());
      qr.compute(W);
    }
    if (qr.rank() < dim / 2)
      throw std::runtime_error("defective A_inf: Jordan-chain fallback failed");
  }
  // Orthonormalize for conditioning; the span is what matters.
  return Eigen::HouseholderQR<Eigen::MatrixXd>(W)
      .householderQ() *
      Eigen::MatrixXd::Identity(dim, dim / 2);
}

// Deterministic sign rule: largest-magnitude coordinate positive.
Eigen::VectorXd sign_normalized(Eigen::VectorXd z) {
  z /= z.norm();
  int imax = 0;
  for (int i = 1; i < z.size(); ++i)
    if (std::abs(z(i)) > std::abs(z(imax))) imax = i;
  if (z(imax) < 0) z = -z;
  return z;
}

}  // namespace

bool in_essential_spectrum(const SpectralProblem& problem, double lambda) {
  return problem.in_essential(lambda);
}

InfinityData infinity_data(const SpectralProblem& problem, double lambda) {
  if (in_essential_spectrum(problem, lambda))
    throw std::domain_error("essential spectrum");
  const Eigen::MatrixXd A = hamiltonian_A(problem.B_inf(lambda));
  const int dim = static_cast<int>(A.rows());

  InfinityData d;
  d.n = dim / 2;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A.cast<std::complex<double>>(),
                                                 false);
  d.eigenvalues = es.eigenvalues();
  d.sigma_plus = 0;
  for (int i = 0; i < dim; ++i)
    if (d.eigenvalues(i).real() > 0) d.sigma_plus += d.eigenvalues(i).real();
  d.sigma_minus = -d.sigma_plus;  // Trace A_inf = 0

  Eigen::MatrixXd Wu = invariant_basis(A, +1);
  Eigen::MatrixXd Ws = invariant_basis(A, -1);

  if (d.n == 2) {
    d.zeta_plus = sign_normalized(wedge_frame(Wu));
    d.zeta_minus = sign_normalized(wedge_frame(Ws));
  } else {
    d.zeta_plus = sign_normalized(Wu.col(0));
    d.zeta_minus = sign_normalized(Ws.col(0));
  }

  // Symplectic completion: rescale the stable block so Wu^T J Ws = -I.
  const Eigen::MatrixXd J =
      d.n == 2 ? Eigen::MatrixXd(sympJ4()) : Eigen::MatrixXd(sympJ2());
  Eigen::MatrixXd M = -(Wu.transpose() * J * Ws).inverse();
  d.K.resize(dim, dim);
  d.K << Wu, Ws * M;

  if (d.n == 2) {
    d.K_minors = compound_matrix_2(d.K);
    d.K_minors_inv = compound_matrix_2(d.K.inverse());
  } else {
    d.K_minors.setZero();
    d.K_minors_inv.setZero();
  }
  return d;
}

Eigen::MatrixXd unstable_frame(const SpectralProblem& problem, double lambda) {
  InfinityData d = infinity_data(problem, lambda);
  return d.K.leftCols(d.n);
}

SigmaOrderingReport sigma_ordering_check(const SpectralProblem& problem,
                                         double lambda) {
  InfinityData d = infinity_data(problem, lambda);
  const int dim = 2 * d.n;

  std::vector<double> sums;
  if (d.n == 2) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        sums.push_back((d.eigenvalues(i) + d.eigenvalues(j)).real());
  } else {
    for (int i = 0; i < dim; ++i) sums.push_back(d.eigenvalues(i).real());
  }
  std::sort(sums.begin(), sums.end(), std::greater<double>());

  SigmaOrderingReport r;
  r.sigma_plus = d.sigma_plus;
  r.gap = sums[0] - sums[1];
  r.warn = r.gap < 1e-6;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (std::abs(d.eigenvalues(i) - d.eigenvalues(j)) < 1e-9)
        r.degenerate = true;
  return r;
}

}  // namespace mtk
