#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mtk/asymptotics.hpp"
#include "mtk/exterior.hpp"
#include "mtk/integrator.hpp"
#include "mtk/problems.hpp"

using namespace mtk;

TEST_CASE("order-4 convergence on the scalar closed-form solution") {
  // Integrate the unscaled planar system u' = A(x) u seeded with the exact
  // decaying solution at x = -5 and compare the endpoint at x = 0.
  auto p = get_problem("scalar_rd");
  const double lambda = 2.0, L = 5.0;
  auto rhs = [&](double x, const Eigen::VectorXd& u) -> Eigen::VectorXd {
    return hamiltonian_A(p.B(x, lambda)) * u;
  };
  const Eigen::Vector2d u0 = p.exact_u_plus(-L, lambda);
  const Eigen::Vector2d uref = p.exact_u_plus(0.0, lambda);

  double errs[3];
  const double steps[3] = {0.04, 0.02, 0.01};
  for (int k = 0; k < 3; ++k) {
    const int n = static_cast<int>(std::lround(L / steps[k]));
    auto path = rk4_path(rhs, -L, u0, L / n, n);
    errs[k] = (path.back() - uref).norm();
  }
  CHECK(errs[0] / errs[1] >= 14.0);
  CHECK(errs[1] / errs[2] >= 14.0);
}

TEST_CASE("scaled run endpoint aligns with zeta+ in the index-0 region") {
  auto p = get_problem("scalar_rd");
  Trajectory t = integrate_scaled(p, 2.0, 20.0, 0.01);
  const InfinityData inf = infinity_data(p, 2.0);
  const Eigen::VectorXd uf = t.states.back().normalized();
  CHECK(std::abs(std::abs(uf.dot(inf.zeta_plus)) - 1.0) < 1e-6);
}

TEST_CASE("kdv5 drift at lambda = -10 stays at machine scale") {
  auto p = get_problem("kdv5", {{"P", 13.0 / 6}, {"c", 1}, {"q", 1}});
  Trajectory t = integrate_scaled(p, -10.0, default_L(p), 0.01);
  DriftReport r = constraint_drift(t);
  CHECK(r.max_I1 < 1e-10);
  CHECK(r.attractivity_ok);
}

TEST_CASE("I2 preservation along the run") {
  auto p = get_problem("kdv5", {{"P", 13.0 / 6}, {"c", 1}, {"q", 1}});
  Trajectory t = integrate_scaled(p, -10.0, default_L(p), 0.01);
  REQUIRE(!t.drift.empty());
  CHECK(t.drift.front().second < 1e-13);
  double worst = 0;
  for (const auto& d : t.drift) worst = std::max(worst, d.second);
  CHECK(worst < 1e-12);
}

TEST_CASE("scaling invariance against the unscaled induced system") {
  auto p = get_problem("kdv5", {{"P", 13.0 / 6}, {"c", 1}, {"q", 1}});
  const double lambda = -1.0, L = 5.0, dx = 0.005;
  Trajectory scaled = integrate_scaled(p, lambda, L, dx);
  const InfinityData inf = infinity_data(p, lambda);

  auto rhs = [&](double x, const Eigen::VectorXd& u) -> Eigen::VectorXd {
    return induced_matrix_2(hamiltonian_A(p.B(x, lambda))) * u;
  };
  const int n = static_cast<int>(std::lround(2 * L / dx));
  auto path = rk4_path(rhs, -L, inf.zeta_plus, 2 * L / n, n);
  const Eigen::VectorXd rescaled =
      path.back() * std::exp(-inf.sigma_plus * (2 * L));
  const double rel =
      (rescaled - scaled.states.back()).norm() / scaled.states.back().norm();
  CHECK(rel < 1e-8);
}

TEST_CASE("default half-length honours the [10, 50] cap") {
  auto sc = get_problem("scalar_rd");
  const double L = default_L(sc);
  CHECK(L >= 10.0);
  CHECK(L <= 50.0);
  // F = 12, gamma = 1 -> ln(12e12) ~ 30.1
  CHECK(L == doctest::Approx(std::log(12.0 / 1e-12)).epsilon(1e-9));
}

TEST_CASE("preconditions") {
  auto p = get_problem("scalar_rd");
  CHECK_THROWS_AS(integrate_scaled(p, 2.0, 20.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_scaled(p, 2.0, -1.0, 0.01), std::invalid_argument);
  // lambda inside the essential spectrum propagates the asymptotics error.
  CHECK_THROWS(integrate_scaled(p, -2.0, 20.0, 0.01));
}

TEST_CASE("transformed run is seeded with the first coordinate form") {
  auto p = get_problem("kdv5", {{"P", 13.0 / 6}, {"c", 1}, {"q", 1}});
  Trajectory t = integrate_transformed(p, -1.0, 10.0, 0.01);
  CHECK(t.transformed);
  CHECK((t.states.front() - Vec6::Unit(0)).norm() == 0.0);
  for (double v : {t.states.back().norm()}) CHECK(std::isfinite(v));
}
