#pragma once

#include <vector>

#include "loewner/curve.hpp"
#include "loewner/maps.hpp"

namespace loewner {

/// Largest |k| used for a single elementary slit; larger increments are split.
inline constexpr double kMaxSlitSlope = 64.0;

/// Elementary centered slits approximating the Loewner flow of W on [t0, t_end].
///
/// Each grid cell of W gets max(1, ceil(dt * steps_per_unit)) equal sub-steps, and each
/// sub-step is the straight slit driven by its increment. The capacities add up to
/// exactly t_end - t0.
std::vector<TiltedSlit> loewner_substeps(const DrivingFunction& W, int steps_per_unit, double t_end);

/// Same, plus the index of the last sub-step of every grid cell.
std::vector<TiltedSlit> loewner_substeps(const DrivingFunction& W, int steps_per_unit, double t_end,
                                         std::vector<std::size_t>& cell_end);

/// Curve generated by W: one point per grid time, starting at W(t0).
CurveTrace trace_curve(const DrivingFunction& W, int steps_per_unit);

/// g_{t_end}(z) for the flow driven by W.
/// Throws SwallowedError (with the hitting time) when z is absorbed before t_end.
Complex evolve_point(const DrivingFunction& W, Complex z, double t_end, int steps_per_unit = 4096);

}  // namespace loewner
