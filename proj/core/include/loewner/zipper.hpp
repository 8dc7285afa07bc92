#pragma once

#include <vector>

#include "loewner/composition.hpp"
#include "loewner/curve.hpp"

namespace loewner {

/// Minimum number of samples accepted by the inverse solver.
inline constexpr std::size_t kMinSamples = 8;

/// Capacity parametrization of a sampled curve and the unzipping maps that produced it.
struct CapacityMap {
  std::vector<double> s;  // arclength of each sample
  std::vector<double> t;  // half-plane capacity of the curve up to each sample
  ConformalComposition steps;
};

struct DrivingExtraction {
  DrivingFunction driving;
  CapacityMap capacity;
};

/// Segment j of a curve is split into ceil(kStartRefinement / j) pieces before unzipping.
inline constexpr double kStartRefinement = 24.0;

/// Unzips `samples` (first on the real axis, the rest in H) one tilted slit per segment
/// piece. `passengers` are transported by the same maps. Returns the centered slits;
/// `sample_end[j]` is the number of slits consumed once sample j + 1 reached the axis.
std::vector<TiltedSlit> unzip(const std::vector<Complex>& samples, std::vector<Complex>& passengers,
                              std::vector<std::size_t>* sample_end = nullptr);

/// Driving function and capacity parametrization of a curve in H attached to R.
/// W(0) is the abscissa of the first sample.
DrivingExtraction compute_driving(const CurveSamples& curve, bool check_simple = true);

/// Maps a curve in C \ (0, inf) starting at 0 in direction -1 to the upper half-plane by sqrt.
CurveSamples attach_and_lift(const CurveSamples& gamma);

struct Uniformization {
  ConformalComposition map;  // sphere minus the arc  ->  H
  CurveSamples chord;        // image of the rest of the loop, from 0 toward infinity
};

/// Conformal map of the complement of loop[root..eps] onto H with loop[eps] -> 0 and
/// loop[root] -> infinity, built as Mobius, sqrt, unzipping and a final scaling.
Uniformization uniformize_slit_complement(const CurveSamples& loop, long long root_index, long long eps_index);

/// Same construction for an arc A = pts[0..m] (pts[0] -> infinity, pts[m] -> 0) carrying
/// an arbitrary list of further points; used for arcs whose complement is not a loop.
Uniformization uniformize_arc(const std::vector<Complex>& arc, const std::vector<Complex>& passengers);

}  // namespace loewner
