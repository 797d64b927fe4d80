// Solitary-wave profiles of the steady fifth-order KdV equation
//   phi'''' - P phi'' + c phi - phi^{q+1} = 0,
// either the explicit sech^4 soliton or a shooting-method homoclinic,
// plus the conserved energy and the negative-eigenvalue certificate.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace mtk {

struct WaveProfile {
  // Uniform grid on [-L_w, L_w]; values are (phi, phi', phi'', phi''').
  std::vector<double> xs;
  std::vector<std::array<double, 4>> vals;
  double P = 0, c = 0;
  int q = 1;
  std::string provenance;  // "explicit" | "shot"

  // Evaluate phi (cubic-spline between nodes, exact zero outside the grid).
  double phi(double x) const;
  // Evaluate all four stored derivatives (splines per column).
  std::array<double, 4> state(double x) const;

  double half_length() const { return xs.empty() ? 0.0 : xs.back(); }

 private:
  friend WaveProfile make_profile(std::vector<double>, std::vector<std::array<double, 4>>,
                                  double, double, int, std::string);
  mutable std::vector<std::vector<double>> spline_m_;  // second derivatives per column
  void build_splines() const;
};

WaveProfile make_profile(std::vector<double> xs, std::vector<std::array<double, 4>> vals,
                         double P, double c, int q, std::string provenance);

// Closed-form soliton phi = (35/24) sech^4(x / (2 sqrt 6)) for
// (P, c, q) = (13/6, 1, 1), with derivatives.
std::array<double, 4> explicit_soliton(double x);
WaveProfile explicit_soliton_profile(double L_w = 0, double dx = 0.001);

// Shooting method for symmetric homoclinic orbits: integrate from the
// unstable tangent space at x = -L_w and enforce phi'(0) = phi'''(0) = 0.
// Throws on bracket or residual failure.
WaveProfile shoot_symmetric(double P, double c, int q, double L_w = 0, double dx = 0.001);

// Conserved energy along the steady equation; state = (phi, phi', phi'', phi''').
double energy(const std::array<double, 4>& s, double P, double c, int q);

// Max-norm ODE residual over the grid interior (phi'''' by finite
// differences of the stored phi''').
double profile_residual(const WaveProfile& w);

// Negative-direction certificate: <phi, L phi> computed as a quadrature
// of the quadratic form must equal -q * integral(phi^{q+2}).
struct Certificate {
  double quadratic_form;
  double rhs;
};
Certificate negative_eigenvalue_certificate(const WaveProfile& w);

// CSV profile contract: header "x,phi,phi1,phi2,phi3", 17 significant digits.
void save_profile_csv(const WaveProfile& w, const std::string& path);
WaveProfile load_profile_csv(const std::string& path);

}  // namespace mtk
