#pragma once

#include <cstddef>
#include <string>

#include "loewner/curve.hpp"

namespace loewner::catalog {

/// Segment [0, i height] sampled at n points.
CurveSamples vertical_slit(double height, std::size_t n);

/// Segment of the given length from 0 at angle pi/2 - theta from the real axis.
CurveSamples ray(double theta, double length, std::size_t n);

/// Circle loop with n samples (counterclockwise, first sample at center + radius).
CurveSamples circle(std::size_t n, double radius = 1.0, Complex center = 0.0);

/// Ellipse with semi-axes a (real) and b (imaginary), n samples, uniform in the angle.
CurveSamples ellipse(double a, double b, std::size_t n);

/// Circular arc center + radius e^{i phi}, phi from phi0 to phi1.
CurveSamples circular_arc(Complex center, double radius, double phi0, double phi1, std::size_t n);

/// Two tangent circular arcs of radii 1 and 1/2 (C^{1,1}, curvature jump at the junction).
CurveSamples two_arc_concatenation(std::size_t n);

/// Tangentially attached curve gamma(0) = 0, gamma'(s) = exp(i (pi + a s^beta)), s in [0, length].
CurveSamples c1beta(double beta, double a, double length, std::size_t n);

/// Unit tangent of the c1beta family, gamma'(s).
Complex c1beta_tangent(double beta, double a, double s);

/// Tangentially attached circular arc gamma(s) = i R (e^{i s / R} - 1), s in [0, length].
CurveSamples tangential_circle_arc(double radius, double length, std::size_t n);

/// Straight continuation gamma(s) = -s, s in [0, length].
CurveSamples straight_continuation(double length, std::size_t n);

}  // namespace loewner::catalog
