#include "mtk/integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace mtk {

std::vector<Eigen::VectorXd> rk4_path(
    const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& rhs,
    double x0, Eigen::VectorXd u0, double h, int nsteps) {
  std::vector<Eigen::VectorXd> path;
  path.reserve(nsteps + 1);
  path.push_back(u0);
  double x = x0;
  for (int i = 0; i < nsteps; ++i) {
    const Eigen::VectorXd k1 = rhs(x, u0);
    const Eigen::VectorXd k2 = rhs(x + h / 2, u0 + (h / 2) * k1);
    const Eigen::VectorXd k3 = rhs(x + h / 2, u0 + (h / 2) * k2);
    const Eigen::VectorXd k4 = rhs(x + h, u0 + h * k3);
    u0 += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    x = x0 + (i + 1) * h;
    path.push_back(u0);
  }
  return path;
}

namespace {

Trajectory run(const SpectralProblem& problem, double lambda, double L,
               double dx, bool transformed) {
  if (L <= 0 || dx <= 0)
    throw std::invalid_argument("integrate_scaled: need L > 0 and dx > 0");
  const InfinityData inf = infinity_data(problem, lambda);
  if (dx * inf.sigma_plus >= 1)
    throw std::invalid_argument(
        "integrate_scaled: dx * sigma+ >= 1 (RK4 stability margin)");

  const int M = std::max(1, static_cast<int>(std::lround(2 * L / dx)));
  const double h = 2 * L / M;

  Trajectory t;
  t.n = inf.n;
  t.sigma_used = inf.sigma_plus;
  t.transformed = transformed;

  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> rhs;
  Eigen::VectorXd seed;
  if (inf.n == 2) {
    Mat6 Kinv = inf.K_minors_inv, Kfwd = inf.K_minors;
    const double s = inf.sigma_plus;
    if (transformed) {
      rhs = [&problem, lambda, Kinv, Kfwd, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        const Mat4 A = hamiltonian_A(problem.B(x, lambda));
        return Kinv * (induced_matrix_2(A) * (Kfwd * u)) - s * u;
      };
      seed = Vec6::Unit(0);
    } else {
      rhs = [&problem, lambda, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        const Mat4 A = hamiltonian_A(problem.B(x, lambda));
        return induced_matrix_2(A) * u - s * u;
      };
      seed = inf.zeta_plus;
    }
  } else {
    Eigen::Matrix2d Kinv = inf.K.inverse(), Kfwd = inf.K;
    const double s = inf.sigma_plus;
    if (transformed) {
      rhs = [&problem, lambda, Kinv, Kfwd, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        return Kinv * (hamiltonian_A(problem.B(x, lambda)) * (Kfwd * u)) - s * u;
      };
      seed = Eigen::Vector2d::Unit(0);
    } else {
      rhs = [&problem, lambda, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        return hamiltonian_A(problem.B(x, lambda)) * u - s * u;
      };
      seed = inf.zeta_plus;
    }
  }

  t.states = rk4_path(rhs, -L, seed, h, M);
  t.xs.resize(M + 1);
  for (int i = 0; i <= M; ++i) t.xs[i] = -L + i * h;

  if (!t.states.back().allFinite())
    throw std::runtime_error("integration diverged (reduce dx or check sigma+)");

  if (inf.n == 2 && !transformed) {
    t.drift.reserve(t.states.size());
    for (const auto& u : t.states) {
      auto [i1, i2] = plucker_invariants(u);
      t.drift.emplace_back(std::abs(i1), std::abs(i2));
    }
  }
  return t;
}

}  // namespace

Trajectory integrate_scaled(const SpectralProblem& problem, double lambda,
                            double L, double dx) {
  return run(problem, lambda, L, dx, false);
}

Trajectory integrate_transformed(const SpectralProblem& problem, double lambda,
                                 double L, double dx) {
  return run(problem, lambda, L, dx, true);
}

DriftReport constraint_drift(const Trajectory& t) {
  DriftReport r;
  if (t.drift.empty()) return r;
  const double i1_0 = t.drift.front().first;
  const double i2_0 = t.drift.front().second;
  const double x0 = t.xs.front();
  for (size_t i = 0; i < t.drift.size(); ++i) {
    const double slack = 1e-8 * (1 + t.states[i].squaredNorm());
    const double dxL = t.xs[i] - x0;
    r.max_I1 = std::max(r.max_I1, t.drift[i].first);
    r.max_I2 = std::max(r.max_I2, t.drift[i].second);
    if (t.drift[i].first > i1_0 * std::exp(-2 * t.sigma_used * dxL) + slack)
      r.attractivity_ok = false;
    if (t.drift[i].second > i2_0 * std::exp(-t.sigma_used * dxL) + slack)
      r.attractivity_ok = false;
  }
  return r;
}

double default_L(const SpectralProblem& problem) {
  double L = 25;
  if (problem.decay_gamma > 0 && problem.decay_F > 0)
    L = std::log(problem.decay_F / 1e-12) / problem.decay_gamma;
  return std::min(50.0, std::max(10.0, L));
}

}  // namespace mtk
