#include "mtk/maslov.hpp"

#include <cmath>
#include <stdexcept>

namespace mtk {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Signed angular distance into (-pi, pi].
double wrap_pi(double d) {
  d = std::remainder(d, 2 * kPi);
  if (d <= -kPi) d += 2 * kPi;
  return d;
}

// Transformed-coordinate dynamics shared by the index routines, with
// point evaluation inside a step for crossing refinement.
struct TransformedFlow {
  const SpectralProblem* p;
  double lambda;
  InfinityData inf;
  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)> rhs;

  TransformedFlow(const SpectralProblem& problem, double lam)
      : p(&problem), lambda(lam), inf(infinity_data(problem, lam)) {
    const double s = inf.sigma_plus;
    if (inf.n == 2) {
      const Mat6 Kf = inf.K_minors, Ki = inf.K_minors_inv;
      rhs = [this, Kf, Ki, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        const Mat4 A = hamiltonian_A(p->B(x, lambda));
        return Ki * (induced_matrix_2(A) * (Kf * u)) - s * u;
      };
    } else {
      const Eigen::Matrix2d Kf = inf.K, Ki = inf.K.inverse();
      rhs = [this, Kf, Ki, s](double x, const Eigen::VectorXd& u)
          -> Eigen::VectorXd {
        return Ki * (hamiltonian_A(p->B(x, lambda)) * (Kf * u)) - s * u;
      };
    }
  }

  Eigen::VectorXd at(double x_from, const Eigen::VectorXd& u_from,
                     double x_to) const {
    if (x_to == x_from) return u_from;
    return rk4_path(rhs, x_from, u_from, (x_to - x_from) / 4, 4).back();
  }
};

// Raw (un-lifted) unit-circle angle of a state.
std::complex<double> unit_angle(const Eigen::VectorXd& u, int n) {
  if (n == 2) return maslov_angle(u);
  const std::complex<double> z(u(0), -u(1));
  if (std::abs(z) < 1e-12 * u.norm())
    throw std::runtime_error("angle undefined (vertex intersection)");
  return z / std::conj(z);
}

// Branch angles at a node: the two eigenangles for n = 2, or the single
// polar angle for n = 1.
std::vector<double> branch_angles(const Eigen::VectorXd& u, int n) {
  if (n == 1) return {std::arg(unit_angle(u, 1))};
  auto [m1, m2] = kappa_pair(u);
  return {std::arg(m1), std::arg(m2)};
}

struct LiftedBranches {
  std::vector<std::vector<double>> theta;  // [branch][node]
};

LiftedBranches lift_branches(const Trajectory& t) {
  const int nb = t.n == 2 ? 2 : 1;
  LiftedBranches lb;
  lb.theta.assign(nb, std::vector<double>(t.states.size()));
  std::vector<double> prev = branch_angles(t.states[0], t.n);
  for (int r = 0; r < nb; ++r) lb.theta[r][0] = prev[r];
  for (size_t i = 1; i < t.states.size(); ++i) {
    std::vector<double> cand = branch_angles(t.states[i], t.n);
    if (nb == 2) {
      // Continuity pairing: the formula's +- ordering can swap branches
      // when the discriminant passes through zero.
      const double costA = std::abs(wrap_pi(cand[0] - lb.theta[0][i - 1])) +
                           std::abs(wrap_pi(cand[1] - lb.theta[1][i - 1]));
      const double costB = std::abs(wrap_pi(cand[1] - lb.theta[0][i - 1])) +
                           std::abs(wrap_pi(cand[0] - lb.theta[1][i - 1]));
      if (costB < costA) std::swap(cand[0], cand[1]);
    }
    for (int r = 0; r < nb; ++r)
      lb.theta[r][i] = lb.theta[r][i - 1] + wrap_pi(cand[r] - lb.theta[r][i - 1]);
  }
  return lb;
}

// Distance of the branch angle from the reference level pi, evaluated at an
// arbitrary x inside step i by short re-integration; theta_guess selects the
// branch among the two candidates.
double branch_gap_at(const TransformedFlow& flow, const Trajectory& t,
                     size_t i, double x, double theta_guess) {
  const Eigen::VectorXd u = flow.at(t.xs[i], t.states[i], x);
  double best = 0, best_cost = 1e300;
  for (double c : branch_angles(u, t.n)) {
    const double cost = std::abs(wrap_pi(c - theta_guess));
    if (cost < best_cost) {
      best_cost = cost;
      best = c;
    }
  }
  return wrap_pi(best - kPi);
}

// Intersection direction of the plane U with the transformed stable plane
// span{e3, e4}, recovered as the null direction of U ^ (a1 e3 + a2 e4).
Vec4 stable_intersection_direction(const Vec6& U) {
  Eigen::Matrix<double, 4, 2> M;
  M.col(0) = wedge_2form_vector(U, Vec4::Unit(2));
  M.col(1) = wedge_2form_vector(U, Vec4::Unit(3));
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 2>> svd(M, Eigen::ComputeFullV);
  const Eigen::Vector2d alpha = svd.matrixV().col(1);
  return alpha(0) * Vec4::Unit(2) + alpha(1) * Vec4::Unit(3);
}

}  // namespace

std::complex<double> maslov_angle(const Vec6& U) {
  const std::complex<double> K(U(0) - U(5), -U(2) + U(3));
  if (std::abs(K) < 1e-12 * U.norm())
    throw std::runtime_error("angle undefined (vertex intersection)");
  return K / std::conj(K);
}

std::pair<std::complex<double>, std::complex<double>> kappa_pair(const Vec6& U) {
  const double disc =
      std::sqrt(4 * U(4) * U(4) + (U(2) + U(3)) * (U(2) + U(3)));
  const std::complex<double> den(U(0) - U(5), U(2) - U(3));
  if (std::abs(den) < 1e-12 * U.norm())
    throw std::runtime_error("angle undefined (vertex intersection)");
  const std::complex<double> num1(U(0) + U(5), disc), num2(U(0) + U(5), -disc);
  return {num1 / den, num2 / den};
}

AngleIndex maslov_index_angle(const SpectralProblem& problem, double lambda,
                              double L, double dx) {
  if (L <= 0) L = default_L(problem);
  const Trajectory t = integrate_transformed(problem, lambda, L, dx);

  AngleIndex out;
  out.trace.xs = t.xs;
  out.trace.kappa.resize(t.states.size());
  std::complex<double> w_prev = unit_angle(t.states[0], t.n);
  out.trace.kappa[0] = std::arg(w_prev);
  for (size_t i = 1; i < t.states.size(); ++i) {
    const std::complex<double> w = unit_angle(t.states[i], t.n);
    const double step = std::arg(w * std::conj(w_prev));
    if (std::abs(step) > 0.999 * kPi) out.trace.certified = false;
    out.trace.kappa[i] = out.trace.kappa[i - 1] + step;
    w_prev = w;
  }
  if (!out.trace.certified)
    throw std::runtime_error("step too large");

  const double winding =
      (out.trace.kappa.back() - out.trace.kappa.front()) / (2 * kPi);
  const long idx = std::lround(winding);
  out.residue = std::abs(winding - static_cast<double>(idx));
  if (out.residue >= 0.05)
    throw std::runtime_error("endpoint not closed (lambda near eigenvalue?)");
  out.index = problem.maslov_orientation * static_cast<int>(idx) +
              problem.maslov_offset;
  return out;
}

IntersectionIndex maslov_index_intersection(const SpectralProblem& problem,
                                            double lambda, double L,
                                            double dx) {
  if (L <= 0) L = default_L(problem);
  const TransformedFlow flow(problem, lambda);
  const Trajectory t = integrate_transformed(problem, lambda, L, dx);
  const LiftedBranches lb = lift_branches(t);
  const int nb = static_cast<int>(lb.theta.size());

  IntersectionIndex out;
  int raw = 0;
  for (size_t i = 0; i + 1 < t.states.size(); ++i) {
    int crossings_this_step = 0;
    for (int r = 0; r < nb; ++r) {
      const double lo = lb.theta[r][i], hi = lb.theta[r][i + 1];
      // Levels pi + 2 pi k strictly inside (lo, hi) or (hi, lo).
      const double a = std::min(lo, hi), b = std::max(lo, hi);
      for (long k = std::lround(std::floor((a - kPi) / (2 * kPi))) ;; ++k) {
        const double level = kPi + 2 * kPi * k;
        if (level <= a) continue;
        if (level >= b) break;
        ++crossings_this_step;
        const int dir = hi > lo ? +1 : -1;
        raw += dir;

        // Bisection to a bracket of width dx/32 on the raw branch angle.
        double xa = t.xs[i], xb = t.xs[i + 1];
        double ga = wrap_pi(lo - kPi);
        for (int it = 0; it < 5; ++it) {
          const double xm = 0.5 * (xa + xb);
          const double frac = (xm - t.xs[i]) / (t.xs[i + 1] - t.xs[i]);
          const double guess = lo + frac * (hi - lo);
          const double gm = branch_gap_at(flow, t, i, xm, guess);
          if ((gm > 0) == (ga > 0)) {
            xa = xm;
            ga = gm;
          } else {
            xb = xm;
          }
        }
        const double x0 = 0.5 * (xa + xb);

        CrossingEvent ev;
        ev.x0 = x0;
        ev.branch = r + 1;
        const Eigen::VectorXd u0 = flow.at(t.xs[i], t.states[i], x0);
        Eigen::VectorXd xi_raw;
        if (t.n == 2) {
          const Vec4 xi_t = stable_intersection_direction(u0);
          xi_raw = flow.inf.K * xi_t;
        } else {
          xi_raw = flow.inf.K * u0;  // the line itself at the crossing
        }
        xi_raw.normalize();
        ev.form_value = xi_raw.dot(problem.B(x0, lambda) * xi_raw);
        ev.sign = ev.form_value >= 0 ? +1 : -1;
        out.events.push_back(ev);
      }
    }
    if (crossings_this_step > 1)
      throw std::runtime_error("non-regular intersection: perturb lambda");
  }
  out.index = problem.maslov_orientation * raw + problem.maslov_offset;
  return out;
}

CrossingForm crossing_sign(const SpectralProblem& problem, double lambda,
                           double x0, const Eigen::VectorXd& xi) {
  if (xi.norm() == 0) throw std::invalid_argument("crossing_sign: xi = 0");
  const Eigen::MatrixXd B = problem.B(x0, lambda);
  CrossingForm cf;
  cf.form_value = xi.dot(B * xi);
  if (std::abs(cf.form_value) < 1e-10 * xi.squaredNorm())
    throw std::runtime_error("non-regular crossing");
  if (xi.size() == 4) {
    const double wedge = omega_wedge_xi_Axi(xi, hamiltonian_A(B));
    if (std::abs(wedge - cf.form_value) >
        1e-10 * std::max(1.0, std::abs(cf.form_value)))
      throw std::runtime_error(
          "crossing-form formulas disagree (wedge vs bilinear)");
  }
  cf.sign = cf.form_value > 0 ? +1 : -1;
  return cf;
}

int maslov_homoclinic(const SpectralProblem& problem) {
  if (!problem.dlambda_B_semidefinite)
    throw std::invalid_argument(
        "homoclinic index undefined: d_lambda B indefinite");
  const double eps[] = {1e-2, 5e-3, 2.5e-3};
  int vals[3];
  for (int i = 0; i < 3; ++i)
    vals[i] = maslov_index_angle(problem, eps[i]).index;
  if (vals[0] != vals[1] || vals[1] != vals[2])
    throw std::runtime_error("eps-sequence not stabilized; refine L/dx");
  return vals[0];
}

int maslov_index_2d(const SpectralProblem& problem, double lambda, double L,
                    double dx) {
  if (problem.n != 1)
    throw std::invalid_argument("maslov_index_2d: problem is not planar");
  return maslov_index_intersection(problem, lambda, L, dx).index;
}

}  // namespace mtk
