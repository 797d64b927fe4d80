// Maslov-index computation along the scaled unstable-bundle trajectory,
// by two routes: (a) winding of the Maslov angle kappa of the path in
// K(lambda)-transformed coordinates; (b) counting signed crossings of the
// branch eigenangles kappa_1, kappa_2 through the stable reference plane,
// with crossing-form signs.  Plus the homoclinic index lim_{lambda->0+}.
#pragma once

#include <complex>
#include <vector>

#include "mtk/integrator.hpp"

namespace mtk {

// Unit-circle Maslov angle of a 2-form: K(U)/conj(K(U)) with
// K(U) = U1 - U6 - i U3 + i U4.  Throws on a vertex (K(U) ~ 0).
std::complex<double> maslov_angle(const Vec6& U);

// The two branch eigenangles of the unitary Q attached to the plane:
// mu_{1,2} = (U1 + U6 +- i sqrt(4 U5^2 + (U3+U4)^2)) / (U1 + iU3 - iU4 - U6).
// Their product equals maslov_angle(U).
std::pair<std::complex<double>, std::complex<double>> kappa_pair(const Vec6& U);

struct AngleTrace {
  std::vector<double> xs;
  std::vector<double> kappa;   // continuous lift, radians
  bool certified = true;       // every step had |d kappa| < pi
};

struct AngleIndex {
  int index = 0;               // in the published per-problem convention
  double residue = 0;          // endpoint rounding residue, fraction of 2pi
  AngleTrace trace;
};

struct CrossingEvent {
  double x0 = 0;               // bisection-refined location
  int branch = 1;              // which eigenangle crossed (1 or 2)
  int sign = 0;                // sign of the crossing form value
  double form_value = 0;       // <xi, B(x0, lambda) xi>
};

struct IntersectionIndex {
  int index = 0;               // published convention
  std::vector<CrossingEvent> events;
};

// Winding-number route.  L = 0 selects the catalog default half-length.
AngleIndex maslov_index_angle(const SpectralProblem& problem, double lambda,
                              double L = 0, double dx = 0.01);

// Intersection-counting route with crossing events refined to dx/16.
IntersectionIndex maslov_index_intersection(const SpectralProblem& problem,
                                            double lambda, double L = 0,
                                            double dx = 0.01);

// Crossing form at a detected intersection direction xi: sign of
// <xi, B(x0, lambda) xi>, cross-checked against the triple-wedge
// coefficient omega ^ xi ^ (A xi) for 4D problems.
struct CrossingForm {
  int sign = 0;
  double form_value = 0;
};
CrossingForm crossing_sign(const SpectralProblem& problem, double lambda,
                           double x0, const Eigen::VectorXd& xi);

// lim_{lambda -> 0+} of the index: evaluated at eps in {1e-2, 5e-3, 2.5e-3},
// all three required to agree.
int maslov_homoclinic(const SpectralProblem& problem);

// n = 1 planar index (signed crossings of the polar angle with the stable
// reference direction).
int maslov_index_2d(const SpectralProblem& problem, double lambda,
                    double L = 0, double dx = 0.01);

}  // namespace mtk
