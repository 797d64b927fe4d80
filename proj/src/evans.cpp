#include "mtk/evans.hpp"

#include <cmath>
#include <stdexcept>

namespace mtk {

EvansSample evans_at(const SpectralProblem& problem, double lambda, double L,
                     double dx) {
  if (L <= 0) L = default_L(problem);
  const InfinityData inf = infinity_data(problem, lambda);

  const Trajectory tt = integrate_transformed(problem, lambda, L, dx);
  const Trajectory tr = integrate_scaled(problem, lambda, L, dx);

  EvansSample s;
  s.lambda = lambda;
  if (inf.n == 2) {
    s.D_transformed = tt.states.back()(0);  // vol pairing with E6
    const Vec6 zeta_st = wedge_frame(inf.K.rightCols(2));
    s.D_proportional = vol_pairing(tr.states.back(), zeta_st);
  } else {
    s.D_transformed = tt.states.back()(0);
    const Eigen::Vector2d st = inf.K.col(1);
    s.D_proportional =
        tr.states.back()(0) * st(1) - tr.states.back()(1) * st(0);
  }
  s.D = s.D_transformed;

  const Eigen::VectorXd v = tr.states.back().normalized();
  Eigen::VectorXd zp = inf.zeta_plus;
  s.proportionality_residual = (v - v.dot(zp) * zp).norm();
  return s;
}

double evans_analytic(const SpectralProblem& problem, double lambda, double L,
                      double dx) {
  if (problem.n != 1 || !problem.exact_u_plus || !problem.exact_u_minus)
    throw std::invalid_argument(
        "evans_analytic: no closed-form solutions for this problem");
  if (in_essential_spectrum(problem, lambda))
    throw std::domain_error("essential spectrum");
  if (L <= 0) L = default_L(problem);

  const auto rhs = [&problem, lambda](double x, const Eigen::VectorXd& u)
      -> Eigen::VectorXd {
    return hamiltonian_A(problem.B(x, lambda)) * u;
  };
  const int M = std::max(1, static_cast<int>(std::lround(L / dx)));
  const Eigen::VectorXd up =
      rk4_path(rhs, -L, problem.exact_u_plus(-L, lambda), L / M, M).back();
  const Eigen::VectorXd um =
      rk4_path(rhs, L, problem.exact_u_minus(L, lambda), -L / M, M).back();
  return up(0) * um(1) - up(1) * um(0);
}

EvansRoots evans_roots(const SpectralProblem& problem, double lo, double hi,
                       int grid_n, double L, double dx) {
  if (grid_n < 8) throw std::invalid_argument("evans_roots: grid_n < 8");
  if (lo >= hi) throw std::invalid_argument("evans_roots: empty interval");

  std::vector<double> lam(grid_n), D(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    lam[i] = lo + (hi - lo) * i / (grid_n - 1);
    if (in_essential_spectrum(problem, lam[i]))
      throw std::domain_error("grid spans essential spectrum");
    D[i] = evans_at(problem, lam[i], L, dx).D;
  }
  double range = 0;
  for (double d : D) range = std::max(range, std::abs(d));

  EvansRoots out;
  for (int i = 0; i + 1 < grid_n; ++i) {
    if (D[i] == 0) {
      out.roots.push_back(lam[i]);
      continue;
    }
    if (D[i] * D[i + 1] < 0) {
      double a = lam[i], b = lam[i + 1], fa = D[i];
      while (b - a > 1e-8) {
        const double m = 0.5 * (a + b);
        const double fm = evans_at(problem, m, L, dx).D;
        if (fm == 0) {
          a = b = m;
          break;
        }
        if ((fm > 0) == (fa > 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      out.roots.push_back(0.5 * (a + b));
    } else if (i > 0 && std::abs(D[i]) < std::abs(D[i - 1]) &&
               std::abs(D[i]) < std::abs(D[i + 1]) &&
               std::abs(D[i]) < 1e-8 * range) {
      out.degenerate_candidates.push_back(lam[i]);
    }
  }
  if (!D.empty() && D.back() == 0) out.roots.push_back(lam.back());
  return out;
}

bool near_eigenvalue(double D, double dynamic_range) {
  return std::abs(D) < 1e-6 * dynamic_range;
}

}  // namespace mtk
