#pragma once

#include <limits>
#include <string>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/zipper.hpp"

namespace loewner {

inline constexpr double kInfiniteEnergy = std::numeric_limits<double>::infinity();

struct EnergyReport {
  double value = 0.0;         // +inf when the divergence detector fired
  double finite_value = 0.0;  // 1/2 sum dW^2/dt on the given grid
  std::string derivative_scheme = "increments";
  double grid_resolution = 0.0;  // largest capacity step
  bool diverged = false;
  /// Fitted exponent g in E(band) ~ (t / T)^g over the finest dyadic bands; g <= 0 means
  /// the energy keeps growing by a fixed amount per level, as at a corner.
  double divergence_exponent = 0.0;
  std::vector<double> band_energies;  // dyadic bands [T 2^-(j+1), T 2^-j], j = 0, 1, ...
};

/// 1/2 sum (dW)^2 / dt, the Dirichlet energy of the piecewise-linear interpolant.
double dirichlet_energy(const DrivingFunction& W);

/// Chordal energy with dyadic divergence diagnostics near the lower end of the grid.
EnergyReport chordal_energy(const DrivingFunction& W);

/// Arclength fractions used when no schedule is given.
inline const std::vector<double> kDefaultEpsSchedule{1.0 / 8.0, 1.0 / 16.0, 1.0 / 32.0, 1.0 / 64.0};

/// Relative slack allowed in the monotonicity of eps-partials, and the energy scale
/// below which the slack is taken relative to this floor instead.
inline constexpr double kMonotoneSlack = 0.02;
inline constexpr double kMonotoneFloor = 0.05;

/// Successive-difference ratios at or above this are not treated as a geometric tail.
inline constexpr double kMaxTailRatio = 0.9;

struct LoopEnergyReport {
  std::vector<double> eps_schedule;
  std::vector<long long> eps_samples;  // removed arc length, in samples
  std::vector<double> partial_energies;
  double extrapolated = 0.0;
  double tail_estimate = 0.0;
  long long root_index = 0;
  bool monotone = true;
};

/// Loop energy rooted at a sample: eps-partials, then a geometric-tail extrapolation.
/// Throws NonConvergenceError (carrying the partials) if they decrease beyond the slack.
LoopEnergyReport loop_energy(const CurveSamples& loop, long long root_index,
                             const std::vector<double>& eps_schedule = kDefaultEpsSchedule);

/// Arc energy rooted at an endpoint or an interior sample.
LoopEnergyReport arc_energy(const CurveSamples& arc, long long root_index,
                            const std::vector<double>& eps_schedule = kDefaultEpsSchedule);

/// Geometric-tail extrapolation of an increasing sequence; returns the tail added.
double richardson_tail(const std::vector<double>& partials);

/// Chordal energy of the part of the image of `rest` after mapping out `first` and
/// turning its tip into the starting point at 0 (z -> -1/z puts infinity at 0).
/// Both lists are in H; `first` starts on the real axis, `rest` hangs from infinity.
double two_slit_energy(const CurveSamples& first, const std::vector<Complex>& rest);

/// |I(chord) - I(reversed chord)| / max(I, floor). The chord is completed to total
/// capacity t_max by its hyperbolic geodesic continuation before reversing.
double reversibility_gap(const CurveSamples& chord, double t_max, double floor = 1e-3);

struct AdditivityGap {
  double gap = 0.0;
  bool interpolated = false;  // split was not a grid point
};

AdditivityGap additivity_gap(const DrivingFunction& W, double split);

/// Samples of the vertical geodesic continuation of a chord past its tip, up to
/// total capacity t_max (returned in the original coordinates, tip excluded).
std::vector<Complex> geodesic_continuation(const CurveSamples& chord, double t_max, std::size_t count);

}  // namespace loewner
