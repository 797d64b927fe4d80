#include "mtk/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mtk/evans.hpp"
#include "mtk/exterior.hpp"
#include "mtk/integrator.hpp"
#include "mtk/maslov.hpp"
#include "mtk/problems.hpp"

namespace mtk {

namespace {

SuiteResult check(const std::string& name, double err, double tol) {
  std::ostringstream os;
  os << "max error " << err << " (tol " << tol << ")";
  return {name, err <= tol, os.str()};
}

Frame42 random_lagrangian_frame(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix2d X, S;
  do {
    X << g(rng), g(rng), g(rng), g(rng);
  } while (std::abs(X.determinant()) < 0.1);
  S << g(rng), 0, 0, g(rng);
  S(0, 1) = S(1, 0) = g(rng);
  Frame42 Z;
  Z << X, S * X;
  return Z;
}

void suite_exterior(std::vector<SuiteResult>& out) {
  std::mt19937 rng(42);
  std::normal_distribution<double> g;
  auto rand4 = [&] { return Vec4(g(rng), g(rng), g(rng), g(rng)); };

  double err = 0;
  for (int k = 0; k < 25; ++k) {
    Mat4 A;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = g(rng);
    err = std::max(err,
                   (induced_matrix_2(A) - induced_matrix_2_oracle(A)).norm());
  }
  out.push_back(check("induced matrix vs derivation-rule oracle", err, 1e-12));

  // Kernel characterization: xi is in the plane of a decomposable U
  // exactly when U ^ xi = 0.
  err = 0;
  double min_outside = 1e300;
  for (int k = 0; k < 25; ++k) {
    const Vec4 u = rand4(), v = rand4(), w = rand4();
    const Vec6 U = wedge_vectors(u, v);
    err = std::max(err, wedge_2form_vector(U, u).norm());
    err = std::max(err, wedge_2form_vector(U, (0.3 * u - 1.7 * v)).norm());
    min_outside = std::min(min_outside, wedge_2form_vector(U, w).norm());
  }
  out.push_back(check("kernel iff-test: U ^ xi = 0 on the plane", err, 1e-12));
  out.push_back({"kernel iff-test: U ^ xi != 0 off the plane",
                 min_outside > 1e-6, "generic directions stay nonzero"});

  // Decomposition identity: wedge of a frame reproduces its 2x2 minors and
  // satisfies I1 = 0; Lagrangian frames additionally satisfy I2 = 0.
  err = 0;
  for (int k = 0; k < 25; ++k) {
    const Frame42 Z = random_lagrangian_frame(rng);
    const Vec6 U = wedge_frame(Z);
    auto [i1, i2] = plucker_invariants(U);
    err = std::max(err, std::abs(i1) / U.squaredNorm());
    err = std::max(err, std::abs(i2) / U.norm());
    err = std::max(err, (U - wedge_vectors(Z.col(0), Z.col(1))).norm());
  }
  out.push_back(check("decomposition identity + Lagrangian invariants", err, 1e-12));

  // Gram-determinant equality of the induced inner product.
  err = 0;
  for (int k = 0; k < 25; ++k) {
    const Vec4 u = rand4(), v = rand4(), w = rand4(), z = rand4();
    Eigen::Matrix2d G;
    G << u.dot(w), u.dot(z), v.dot(w), v.dot(z);
    err = std::max(err,
                   std::abs(induced_inner_product(wedge_vectors(u, v),
                                                  wedge_vectors(w, z)) -
                            G.determinant()));
  }
  out.push_back(check("Gram-determinant equality", err, 1e-10));

  // Crossing form: omega ^ xi ^ (A xi) against <xi, B xi>.
  err = 0;
  for (int k = 0; k < 25; ++k) {
    Mat4 B;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) B(i, j) = B(j, i) = g(rng);
    const Vec4 xi = rand4();
    err = std::max(err, std::abs(omega_wedge_xi_Axi(xi, hamiltonian_A(B)) -
                                 xi.dot(B * xi)));
  }
  out.push_back(check("crossing-form wedge vs bilinear", err, 1e-10));
}

void suite_attractivity(std::vector<SuiteResult>& out) {
  const SpectralProblem kdv = get_problem(
      "kdv5", {{"P", 13.0 / 6}, {"c", 1.0}, {"q", 1.0}});

  // Exact Lagrangian data on the constant-coefficient system: I1 stays at
  // machine zero.
  {
    const Trajectory t = integrate_scaled(kdv, -10.0, 15.0, 0.01);
    const DriftReport r = constraint_drift(t);
    out.push_back(check("I1 drift, kdv5 lambda = -10", r.max_I1, 1e-10));
    out.push_back({"attractivity envelope, kdv5 lambda = -10",
                   r.attractivity_ok, "exponential decay envelope"});
  }

  // Perturbed initial data off the Grassmannian, frozen coefficients:
  // I1 decays like e^{-2 sigma (x+L)} within a factor of 2.
  {
    const InfinityData inf = infinity_data(kdv, -1.0);
    const Mat6 A2 = induced_matrix_2(hamiltonian_A(kdv.B_inf(-1.0)));
    const double s = inf.sigma_plus, L = 5.0;
    Vec6 u0 = inf.zeta_plus;
    u0(1) += 1e-3;  // breaks I1
    const auto rhs = [&](double, const Eigen::VectorXd& u) -> Eigen::VectorXd {
      return A2 * u - s * u;
    };
    const auto path = rk4_path(rhs, -L, u0, 0.01, 1000);
    double worst = 0;
    const double i1_0 = std::abs(plucker_invariants(u0).first);
    for (size_t i = 0; i < path.size(); ++i) {
      const double x = -L + 0.01 * i;
      const double bound = 2 * i1_0 * std::exp(-2 * s * (x + L)) + 1e-14;
      worst = std::max(worst,
                       std::abs(plucker_invariants(path[i]).first) / bound);
    }
    out.push_back(check("perturbed I1 decay, frozen coefficients", worst, 1.0));
  }
}

void suite_oracles(std::vector<SuiteResult>& out) {
  // scalar_rd: evans_analytic is a constant multiple of the closed form.
  {
    const SpectralProblem p = get_problem("scalar_rd");
    double lo = 1e300, hi = 0;
    for (double lam : {-0.9, -0.4, 0.3, 0.8, 1.8}) {
      const double closed = 2 * std::sqrt(lam + 1) * (2.0 / 15) * (2.0 / 15) *
                            lam * (4 * lam + 3) * (4 * lam - 5);
      const double ratio = evans_analytic(p, lam) / closed;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.push_back(check("scalar_rd Wronskian ratio variance",
                        (hi - lo) / std::abs(hi), 1e-6));
  }

  // sech^2 oracle: Wronskian matches (2/225) sqrt(k)(k-1)(k-4)(k-9).
  {
    const SpectralProblem p = get_problem("sech2_oracle");
    double err = 0;
    for (double k : {2.0, 6.0, 12.0}) {
      const double exact = p.analytic.evans(k);
      err = std::max(err,
                     std::abs(evans_analytic(p, k) - exact) / std::abs(exact));
    }
    out.push_back(check("sech2 oracle Wronskian", err, 1e-8));
  }

  // lwsw2 reduced problem: exact value and index.
  {
    const SpectralProblem p = get_problem("lwsw2", {{"nu", 0.2}});
    const double exact = p.analytic.evans(-0.4);
    const double err = std::abs(evans_analytic(p, -0.4) - exact) / exact;
    out.push_back(check("lwsw2 Wronskian at lambda = -0.4", err, 1e-8));
    const bool idx = maslov_index_2d(p, -0.1) == 1 && maslov_index_2d(p, 0.2) == 0;
    out.push_back({"lwsw2 planar index 1/0 across zero", idx, "closed-form table"});
  }

  // coupled_rd eigenvalues at c = 1 via the closed subsystem formulas.
  {
    const SpectralProblem p = get_problem("coupled_rd", {{"c", 1.0}});
    const std::vector<double> expect = {-5, -3, -2, 0, 3, 5};
    double err = 0;
    for (size_t i = 0; i < expect.size(); ++i)
      err = std::max(err, std::abs((*p.analytic.eigenvalues)[i] - expect[i]));
    out.push_back(check("coupled_rd closed-form eigenvalues", err, 1e-12));
  }
}

}  // namespace

std::vector<SuiteResult> run_verify_suite(const std::string& suite) {
  std::vector<SuiteResult> out;
  if (suite == "exterior" || suite == "all") suite_exterior(out);
  if (suite == "attractivity" || suite == "all") suite_attractivity(out);
  if (suite == "oracles" || suite == "all") suite_oracles(out);
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace mtk
