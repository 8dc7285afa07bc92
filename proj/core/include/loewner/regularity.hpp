#pragma once

#include <string>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/zipper.hpp"

namespace loewner {

/// omega(delta) = sup over grid pairs with |x_i - x_j| <= delta of |f_i - f_j|.
/// `x` must be increasing. Throws RefinementError for delta below the grid spacing.
std::vector<double> modulus_of_continuity(const std::vector<double>& x, const std::vector<double>& f,
                                          const std::vector<double>& deltas);

struct HolderFit {
  double exponent = 0.0;
  double constant = 0.0;
  bool log_correction = false;
  double residual = 0.0;  // RMS residual of log omega
  double delta_min = 0.0;
  double delta_max = 0.0;
};

/// Least-squares slope of log omega against log delta. With 11 or more scales the two
/// smallest and the largest are left out. The log-corrected model C delta^b log(1/delta)
/// is preferred (and flagged) when it lowers the residual by more than 25%.
HolderFit holder_fit(const std::vector<double>& deltas, const std::vector<double>& omegas);

/// Dyadic scales span * 2^-j, j = 1, 2, ..., down to `finest`.
std::vector<double> dyadic_scales(double span, double finest);

struct RegularityReport {
  double beta = 0.0;
  std::string branch;  // "W" (beta <= 1/2) or "Wdot" (beta > 1/2)
  double predicted_exponent = 0.0;
  HolderFit fit;
  std::vector<double> deltas, omegas;  // the modulus of continuity that was fitted
  double wdot_start = 0.0;  // finite-difference derivative in the first cell
  double wdot_zero = 0.0;   // slope at t = 0 of a power-law fit to W on the first quarter
  double wdot_max = 0.0;
  DrivingFunction driving;
};

/// Extracts W from the sqrt-lift of a tangentially attached curve and fits the Holder
/// exponent of W (beta <= 1/2) or of its difference quotients (beta > 1/2).
RegularityReport verify_regularity_shift(const CurveSamples& curve, double beta);

struct VerticalBound {
  double constant = 0.0;             // sup |W_t| / (omega(5t) sqrt(t))
  std::size_t excluded_samples = 0;  // early samples and samples with omega = 0
  double excluded_t_max = 0.0;       // largest excluded capacity
};

/// Empirical constant of |W_t| <= c omega(5t) sqrt(t), omega the modulus of continuity of
/// the unit tangent of the curve in arclength. The first `skip` samples are not used.
VerticalBound vertical_bound_check(const CurveSamples& curve, std::size_t skip = 8);

struct LsEstimate {
  double s = 0.0;
  double L = 0.0;
  double integrand_tail = 0.0;  // size of the truncated part of the integral
  double wdot = 0.0;            // central difference of W at t(s)
  double t = 0.0;
};

/// Truncation diagnostic above which estimate_Ls reports an error.
inline constexpr double kMaxLsTail = 0.5;

/// L_s = (1/pi) int (v(r) - v(0)) / r^2 dr with v = arg phi_s', for the sample with the
/// given index of a tangentially attached curve.
LsEstimate estimate_Ls(const CurveSamples& curve, std::size_t index);

}  // namespace loewner
