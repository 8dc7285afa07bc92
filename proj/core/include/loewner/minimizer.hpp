#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loewner/curve.hpp"
#include "loewner/energy.hpp"

namespace loewner {

struct MinimizerResult {
  CurveSamples curve;
  double energy = 0.0;
  int iterations = 0;
  /// Chord minimizer: |arg(tip) - phi|. Loop minimizer: largest chordal energy of a free
  /// arc in the complement of the rest of the loop.
  double stationarity = 0.0;
  bool converged = false;
  std::vector<double> energy_history;
  std::size_t rejected_steps = 0;          // loop replacements refused by the isotopy or energy guard
  std::vector<long long> constraint_index;  // sample index of each constraint point
  DrivingFunction driving;                  // chord minimizer only
};

struct ChordOptions {
  std::size_t cells = 32;
  int steps_per_unit = 1024;
  int max_iterations = 60;
  double tolerance = 1e-7;  // sup-norm change of W that stops the iteration
  std::size_t continuation_samples = 64;
};

/// Smallest chordal energy of a chord in H from 0 to infinity through r e^{i phi}.
///
/// W lives on [0, 1] (W(0) = 0) on a grid refined toward t = 1; the traced tip must have
/// argument phi. Each iteration solves the quadratic energy subject to the linearized
/// constraint, then backtracks on energy + mu |constraint|. The returned curve is the
/// trace followed by its vertical geodesic continuation, scaled so the tip has modulus r.
MinimizerResult minimize_chord_through_point(double phi, double r, const ChordOptions& options = {});

struct ConstraintSet {
  std::vector<Complex> points;
  bool closed = true;
  std::optional<CurveSamples> initial_curve;  // fixes the isotopy class; passes through the points in order
};

struct LoopOptions {
  std::size_t samples = 256;
  int max_sweeps = 16;
  double tolerance = 2e-3;  // largest arc movement relative to the loop length
  std::vector<double> eps_schedule = kDefaultEpsSchedule;
};

/// Local minimizer of the loop energy among Jordan curves through the constraint points,
/// by sweeps that replace every free arc with the hyperbolic geodesic in the complement of
/// the rest. Replacements that break simplicity are refused; a sweep that raises the
/// energy is undone and ends the run.
MinimizerResult minimize_loop(const ConstraintSet& constraints, const LoopOptions& options = {});

/// Hyperbolic geodesic of the sphere minus `arc` from arc.back() to arc.front(), with
/// `count` samples equally spaced in arclength (both endpoints included).
CurveSamples hyperbolic_geodesic(const CurveSamples& arc, std::size_t count);

/// Chordal energy of `arc` in the complement of `rest`, where rest runs from arc.back()
/// around to arc.front(). Zero exactly for the hyperbolic geodesic.
double geodesic_deviation(const std::vector<Complex>& arc, const std::vector<Complex>& rest);

struct RootSweep {
  std::vector<long long> roots;
  std::vector<double> energies;
  double spread = 0.0;  // (max - min) / max(mean, kMonotoneFloor)
};

RootSweep minimizer_root_sweep(const MinimizerResult& result, const std::vector<long long>& roots,
                               const std::vector<double>& eps_schedule = kDefaultEpsSchedule);

}  // namespace loewner
