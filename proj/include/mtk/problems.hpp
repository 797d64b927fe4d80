// Catalog of spectral problems J u' = B(x, lambda) u from solitary-wave
// linearizations, with closed-form limits, essential-spectrum predicates
// and whatever analytic spectrum data exists for oracle tests.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtk/waves.hpp"

namespace mtk {

// Step function of lambda recording a published Maslov-index table.
struct MaslovTable {
  std::vector<double> breaks;  // ascending eigenvalue locations
  std::vector<int> values;     // size breaks.size() + 1
  std::optional<int> at(double lambda) const;
};

struct AnalyticSpectrumData {
  std::optional<std::vector<double>> eigenvalues;
  std::function<double(double)> evans;  // closed-form Evans/Wronskian, or null
  std::optional<MaslovTable> maslov_table;
};

struct SpectralProblem {
  std::string name;
  int n = 1;  // half-dimension: system size is 2n
  std::map<std::string, double> params;

  std::function<Eigen::MatrixXd(double, double)> B;  // B(x, lambda), symmetric
  std::function<Eigen::MatrixXd(double)> B_inf;
  std::function<bool(double)> in_essential;  // closed-form predicate

  // Exponential approach ||B - B_inf|| <= F e^{-gamma |x|}.
  double decay_F = 0, decay_gamma = 0;

  // Orientation factor mapping the crossing-form index convention onto the
  // published per-problem tables (the reference 4D tables carry the sign
  // opposite to the crossing-form convention; the catalog records the
  // published tables as-is instead of normalizing).
  int maslov_orientation = +1;
  // Additive anchor: published index = orientation * raw count + offset.
  // Nonzero when a published table is anchored to 0 at the opposite end of
  // the hyperbolic window from the raw count's natural anchor.
  int maslov_offset = 0;
  bool dlambda_B_semidefinite = true;

  AnalyticSpectrumData analytic;

  // Closed-form decaying solutions (n = 1 oracle problems only): the
  // unstable solution u^+(x, lambda) and stable solution u^-(x, lambda)
  // in the polynomial-in-tanh normalization.  Null when unavailable.
  std::function<Eigen::Vector2d(double, double)> exact_u_plus;
  std::function<Eigen::Vector2d(double, double)> exact_u_minus;
};

// Build one of the seven catalog problems.  kdv5 requires P, c, q; the wave
// profile is the explicit soliton at (13/6, 1, 1) and a shot profile
// otherwise (or pass one explicitly via get_problem_kdv5).
SpectralProblem get_problem(const std::string& name,
                            const std::map<std::string, double>& params = {});
SpectralProblem get_problem_kdv5(const std::map<std::string, double>& params,
                                 WaveProfile profile);

AnalyticSpectrumData analytic_spectrum_data(const SpectralProblem& p);

// The two decoupled 2D subsystems of coupled_rd (k = 0 or 1):
// v'' = (lambda + 4 + 2kc - 12 sech^2 x) v.  Used by the sum-formula tests.
SpectralProblem coupled_rd_subsystem(double c, int k);

}  // namespace mtk
