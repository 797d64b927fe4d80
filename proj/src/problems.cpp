#include "mtk/problems.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>

namespace mtk {

namespace {

double sech(double z) { return 1.0 / std::cosh(z); }

double require(const std::map<std::string, double>& params, const std::string& key,
               const std::string& problem) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(problem + ": missing parameter '" + key + "'");
  return it->second;
}

// Hamiltonian-symmetric storage for planar problems: with
// J = [[0,-1],[1,0]], B = diag(-b1, b2) gives A = -J B = [[0,b2],[b1,0]],
// i.e. the first-order form of v'' = b1 b2 v with u = (v, v'/b2).
Eigen::MatrixXd planarB(double b1, double b2) {
  Eigen::MatrixXd B(2, 2);
  B << -b1, 0, 0, b2;
  return B;
}

// ---- scalar reaction-diffusion ------------------------------------------

SpectralProblem make_scalar_rd() {
  SpectralProblem p;
  p.name = "scalar_rd";
  p.n = 1;
  p.B = [](double x, double lam) {
    return planarB(lam + 1 - 3 * sech(0.5 * x) * sech(0.5 * x), 1.0);
  };
  p.B_inf = [](double lam) { return planarB(lam + 1, 1.0); };
  p.in_essential = [](double lam) { return lam <= -1.0; };
  p.decay_F = 12.0;  // 3 sech^2(x/2) <= 12 e^{-|x|}
  p.decay_gamma = 1.0;
  p.analytic.eigenvalues = std::vector<double>{-0.75, 0.0, 1.25};
  // Wronskian convention det[u^+ u^-] with the a3 = 1 normalization of the
  // explicit solutions below (the opposite wedge order to D = u^- ^ u^+,
  // hence the +2 prefactor).
  p.analytic.evans = [](double lam) {
    return 2.0 * std::sqrt(lam + 1) * (2.0 / 15) * (2.0 / 15) * lam *
           (4 * lam + 3) * (4 * lam - 5);
  };
  p.analytic.maslov_table = MaslovTable{{-0.75, 0.0, 1.25}, {3, 2, 1, 0}};
  auto exact = [](double x, double lam, int sgn) {
    const double s = 0.5 * x;
    const double g = 2 * std::sqrt(lam + 1);
    const double a0 = g * (4 - g * g) / 15, a1 = (2 * g * g - 3) / 5, a2 = -g;
    const double t = std::tanh(s), sc2 = sech(s) * sech(s);
    const double h = sgn * a0 + a1 * t + sgn * a2 * t * t + t * t * t;
    const double hs = (a1 + sgn * 2 * a2 * t + 3 * t * t) * sc2;
    const double e = std::exp(sgn * g * s);
    return Eigen::Vector2d(e * h, 0.5 * e * (hs + sgn * g * h));
  };
  p.exact_u_plus = [exact](double x, double lam) { return exact(x, lam, +1); };
  p.exact_u_minus = [exact](double x, double lam) { return exact(x, lam, -1); };
  return p;
}

// ---- coupled reaction-diffusion -----------------------------------------

SpectralProblem make_coupled_rd(double c) {
  if (c <= -2.0)
    throw std::invalid_argument("coupled_rd: parameter domain requires c > -2");
  SpectralProblem p;
  p.name = "coupled_rd";
  p.n = 2;
  p.params = {{"c", c}};
  p.B = [c](double x, double lam) {
    const double f = lam + 4 + c - 12 * sech(x) * sech(x);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = B(1, 1) = -f;
    B(0, 1) = B(1, 0) = c;
    B(2, 2) = B(3, 3) = 1;
    return B;
  };
  p.B_inf = [c](double lam) {
    const double f = lam + 4 + c;
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = B(1, 1) = -f;
    B(0, 1) = B(1, 0) = c;
    B(2, 2) = B(3, 3) = 1;
    return B;
  };
  p.in_essential = [c](double lam) { return lam <= std::max(-4.0, -4 - 2 * c); };
  p.decay_F = 96.0;  // two diagonal 12 sech^2 x entries, sech^2 x <= 4 e^{-2|x|}
  p.decay_gamma = 2.0;
  std::vector<double> eigs = {-3, 0, 5, -3 - 2 * c, -2 * c, 5 - 2 * c};
  std::sort(eigs.begin(), eigs.end());
  p.analytic.eigenvalues = eigs;
  return p;
}

SpectralProblem make_lwsw(double c, double nu, bool monotone) {
  if (!(c > 4 * nu && nu > 0))
    throw std::invalid_argument("lwsw: existence condition violated (need c > 4 nu > 0)");
  const double A = std::sqrt(2 * nu * (c - 4 * nu));
  SpectralProblem p;
  p.name = monotone ? "lwsw4" : "lwsw_nonmonotone";
  p.n = 2;
  p.params = {{"c", c}, {"nu", nu}};
  const double rnu = std::sqrt(nu);
  p.B = [c, nu, A, rnu, monotone](double x, double lam) {
    const double w = 2 * nu * sech(rnu * x) * sech(rnu * x);
    const double u = A * sech(rnu * x);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = lam - 2 * nu + 2 * w;
    B(0, 1) = B(1, 0) = 2 * u;
    B(1, 1) = (monotone ? lam : -lam) - c + 6 * w;
    B(2, 2) = 0.5;
    B(3, 3) = 1;
    return B;
  };
  p.B_inf = [c, nu, monotone](double lam) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = lam - 2 * nu;
    B(1, 1) = (monotone ? lam : -lam) - c;
    B(2, 2) = 0.5;
    B(3, 3) = 1;
    return B;
  };
  if (monotone)
    p.in_essential = [nu, c](double lam) { return lam >= std::min(2 * nu, c); };
  else
    p.in_essential = [nu, c](double lam) { return lam <= -c || lam >= 2 * nu; };
  // Slowest term is 2 u-hat = 2A sech(sqrt(nu) x) <= 4A e^{-sqrt(nu)|x|}.
  p.decay_F = 8 * A + 48 * nu;
  p.decay_gamma = rnu;
  p.maslov_orientation = -1;  // published tables (0/-1/-2/-3 and -4..-3)
  p.dlambda_B_semidefinite = monotone;
  p.analytic.eigenvalues = std::vector<double>{0.0};
  return p;
}

SpectralProblem make_lwsw2(double nu) {
  if (nu <= 0) throw std::invalid_argument("lwsw2: need nu > 0");
  SpectralProblem p;
  p.name = "lwsw2";
  p.n = 1;
  p.params = {{"nu", nu}};
  const double rnu = std::sqrt(nu);
  p.B = [nu, rnu](double x, double lam) {
    return planarB(nu - 0.5 * lam - 2 * nu * sech(rnu * x) * sech(rnu * x), 1.0);
  };
  p.B_inf = [nu](double lam) { return planarB(nu - 0.5 * lam, 1.0); };
  p.in_essential = [nu](double lam) { return lam >= 2 * nu; };
  p.decay_F = 8 * nu;
  p.decay_gamma = 2 * rnu;
  // d/dlambda B = diag(+1/2, 0) >= 0, reversing the direction in which the
  // index counts eigenvalues. The published table anchors the index to 0 at
  // the right edge lambda -> 2 nu of the hyperbolic window, so the published
  // value is (total point-eigenvalue count) minus the raw crossing count:
  // published = -raw + 1.
  p.maslov_orientation = -1;
  p.maslov_offset = 1;
  p.analytic.eigenvalues = std::vector<double>{0.0};
  p.analytic.evans = [nu](double lam) {
    return -(lam / std::sqrt(nu)) * std::sqrt(1 - lam / (2 * nu));
  };
  p.analytic.maslov_table = MaslovTable{{0.0}, {1, 0}};
  auto exact = [nu, rnu](double x, double lam, int sgn) {
    const double mu = std::sqrt(1 - lam / (2 * nu));
    const double t = std::tanh(rnu * x), sc2 = sech(rnu * x) * sech(rnu * x);
    const double e = std::exp(sgn * mu * rnu * x);
    const double v = e * (-sgn * mu + t);
    const double vx = sgn * mu * rnu * v + e * rnu * sc2;
    return Eigen::Vector2d(v, vx);
  };
  p.exact_u_plus = [exact](double x, double lam) { return exact(x, lam, +1); };
  p.exact_u_minus = [exact](double x, double lam) { return exact(x, lam, -1); };
  return p;
}

SpectralProblem make_sech2_oracle() {
  SpectralProblem p;
  p.name = "sech2_oracle";
  p.n = 1;
  p.B = [](double x, double kap) {
    return planarB(kap - 12 * sech(x) * sech(x), 1.0);
  };
  p.B_inf = [](double kap) { return planarB(kap, 1.0); };
  p.in_essential = [](double kap) { return kap <= 0.0; };
  p.decay_F = 48.0;
  p.decay_gamma = 2.0;
  p.analytic.eigenvalues = std::vector<double>{1.0, 4.0, 9.0};
  p.analytic.evans = [](double kap) {
    const double r = std::sqrt(kap);
    return (2.0 / 225) * r * (kap - 1) * (kap - 4) * (kap - 9);
  };
  p.analytic.maslov_table = MaslovTable{{1.0, 4.0, 9.0}, {3, 2, 1, 0}};
  auto exact = [](double x, double kap, int sgn) {
    const double r = std::sqrt(kap);
    const double a0 = r * (4 - kap) / 15, a1 = (2 * kap - 3) / 5, a2 = -r;
    const double t = std::tanh(x), sc2 = sech(x) * sech(x);
    const double e = std::exp(sgn * r * x);
    const double h = sgn * a0 + a1 * t + sgn * a2 * t * t + t * t * t;
    const double hx = (a1 + sgn * 2 * a2 * t + 3 * t * t) * sc2;
    return Eigen::Vector2d(e * h, e * (hx + sgn * r * h));
  };
  p.exact_u_plus = [exact](double x, double kap) { return exact(x, kap, +1); };
  p.exact_u_minus = [exact](double x, double kap) { return exact(x, kap, -1); };
  return p;
}

// ---- fifth-order KdV ------------------------------------------------------

// Slowest linear decay rate of the steady equation at the origin.
double kdv5_profile_rate(double P, double c) {
  const double disc = P * P - 4 * c;
  if (disc >= 0) return std::sqrt((P - std::sqrt(disc)) / 2);
  return std::sqrt(std::complex<double>(P / 2, std::sqrt(-disc) / 2)).real();
}

SpectralProblem make_kdv5(double P, double c, int q, WaveProfile profile) {
  SpectralProblem p;
  p.name = "kdv5";
  p.n = 2;
  p.params = {{"P", P}, {"c", c}, {"q", static_cast<double>(q)}};
  auto prof = std::make_shared<WaveProfile>(std::move(profile));
  p.B = [P, c, q, prof](double x, double lam) {
    const double a = c - (q + 1) * std::pow(prof->phi(x), q);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = a - lam;
    B(1, 1) = -1;
    B(2, 3) = B(3, 2) = 1;
    B(3, 3) = P;
    return B;
  };
  p.B_inf = [P, c](double lam) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 4);
    B(0, 0) = c - lam;
    B(1, 1) = -1;
    B(2, 3) = B(3, 2) = 1;
    B(3, 3) = P;
    return B;
  };
  // lambda^edge = a_inf - P(P - |P|)/8 (equals a_inf = c for P > 0).
  const double edge = c - P * (P - std::abs(P)) / 8.0;
  p.in_essential = [edge](double lam) { return lam >= edge; };
  // Envelope of ||B - B_inf|| = (q+1)|phi|^q measured against the linear
  // decay rate of the profile.
  p.decay_gamma = q * kdv5_profile_rate(P, c);
  double F = 0;
  for (size_t i = 0; i < prof->xs.size(); i += 16) {
    const double dev = (q + 1) * std::pow(std::abs(prof->vals[i][0]), q);
    F = std::max(F, dev * std::exp(p.decay_gamma * std::abs(prof->xs[i])));
  }
  p.decay_F = 1.1 * F;
  p.maslov_orientation = -1;  // published table 0/1/2/3 across the roots
  p.analytic.eigenvalues = std::vector<double>{0.0};
  return p;
}

}  // namespace

std::optional<int> MaslovTable::at(double lambda) const {
  for (size_t i = 0; i < breaks.size(); ++i)
    if (std::abs(lambda - breaks[i]) < 1e-9) return std::nullopt;  // at an eigenvalue
  size_t i = 0;
  while (i < breaks.size() && lambda > breaks[i]) ++i;
  return values[i];
}

SpectralProblem get_problem_kdv5(const std::map<std::string, double>& params,
                                 WaveProfile profile) {
  const double P = require(params, "P", "kdv5");
  const double c = require(params, "c", "kdv5");
  const int q = static_cast<int>(std::llround(require(params, "q", "kdv5")));
  if (c <= 0 || P + 2 * std::sqrt(c) <= 0)
    throw std::invalid_argument("kdv5: origin not hyperbolic (need P + 2 sqrt(c) > 0)");
  return make_kdv5(P, c, q, std::move(profile));
}

SpectralProblem get_problem(const std::string& name,
                            const std::map<std::string, double>& params) {
  if (name == "scalar_rd") return make_scalar_rd();
  if (name == "coupled_rd") return make_coupled_rd(require(params, "c", name));
  if (name == "lwsw4")
    return make_lwsw(require(params, "c", name), require(params, "nu", name), true);
  if (name == "lwsw_nonmonotone")
    return make_lwsw(require(params, "c", name), require(params, "nu", name), false);
  if (name == "lwsw2") return make_lwsw2(require(params, "nu", name));
  if (name == "sech2_oracle") return make_sech2_oracle();
  if (name == "kdv5") {
    const double P = require(params, "P", name);
    const double c = require(params, "c", name);
    const int q = static_cast<int>(std::llround(require(params, "q", name)));
    WaveProfile prof;
    if (std::abs(P - 13.0 / 6) < 1e-12 && std::abs(c - 1) < 1e-12 && q == 1)
      prof = explicit_soliton_profile();
    else
      prof = shoot_symmetric(P, c, q);
    return get_problem_kdv5(params, std::move(prof));
  }
  throw std::invalid_argument("unknown problem '" + name + "'");
}

AnalyticSpectrumData analytic_spectrum_data(const SpectralProblem& p) {
  return p.analytic;
}

SpectralProblem coupled_rd_subsystem(double c, int k) {
  if (k != 0 && k != 1) throw std::invalid_argument("subsystem index must be 0 or 1");
  const double shift = 2.0 * k * c;
  SpectralProblem p;
  p.name = "coupled_rd_sub" + std::to_string(k);
  p.n = 1;
  p.params = {{"c", c}};
  p.B = [shift](double x, double lam) {
    return planarB(lam + 4 + shift - 12 * sech(x) * sech(x), 1.0);
  };
  p.B_inf = [shift](double lam) { return planarB(lam + 4 + shift, 1.0); };
  p.in_essential = [shift](double lam) { return lam <= -4 - shift; };
  p.decay_F = 48.0;
  p.decay_gamma = 2.0;
  p.analytic.eigenvalues = std::vector<double>{-3 - shift, -shift, 5 - shift};
  p.analytic.maslov_table =
      MaslovTable{{-3 - shift, -shift, 5 - shift}, {3, 2, 1, 0}};
  return p;
}

}  // namespace mtk
