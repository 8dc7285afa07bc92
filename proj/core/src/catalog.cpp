#include "loewner/catalog.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "loewner/error.hpp"

namespace loewner::catalog {

namespace {

constexpr double kPi = std::numbers::pi;

void require(std::size_t n, std::size_t at_least) {
  if (n < at_least) throw InputError("catalog curve needs at least " + std::to_string(at_least) + " samples");
}

// 8-point Gauss-Legendre on [-1, 1]
constexpr std::array<double, 4> kNodes{0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                       0.9602898564975363};
constexpr std::array<double, 4> kWeights{0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                         0.1012285362903763};

}  // namespace

CurveSamples vertical_slit(double height, std::size_t n) {
  require(n, 2);
  if (!(height > 0.0)) throw InputError("height must be positive");
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {0.0, height * static_cast<double>(i) / static_cast<double>(n - 1)};
  return CurveSamples::arc(std::move(pts));
}

CurveSamples ray(double theta, double length, std::size_t n) {
  require(n, 2);
  if (!(std::abs(theta) < kPi / 2.0)) throw InputError("ray tilt must satisfy |theta| < pi/2");
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = std::polar(length * static_cast<double>(i) / static_cast<double>(n - 1), kPi / 2.0 - theta);
  }
  pts[0] = 0.0;
  return CurveSamples::arc(std::move(pts));
}

CurveSamples circle(std::size_t n, double radius, Complex center) {
  require(n, 3);
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = center + std::polar(radius, 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
  return CurveSamples::loop(std::move(pts));
}

CurveSamples ellipse(double a, double b, std::size_t n) {
  require(n, 3);
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    pts[i] = {a * std::cos(phi), b * std::sin(phi)};
  }
  return CurveSamples::loop(std::move(pts));
}

CurveSamples circular_arc(Complex center, double radius, double phi0, double phi1, std::size_t n) {
  require(n, 2);
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = center + std::polar(radius, phi0 + (phi1 - phi0) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return CurveSamples::arc(std::move(pts));
}

CurveSamples two_arc_concatenation(std::size_t n) {
  require(n, 4);
  // quarter circle of radius 1 from 0 to 1 + i, then a half circle of radius 1/2
  const std::size_t n1 = n / 2;
  const std::size_t n2 = n - n1;
  std::vector<Complex> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n1; ++i) {
    pts.push_back(Complex{0.0, 1.0} + std::polar(1.0, -kPi / 2.0 + (kPi / 2.0) * static_cast<double>(i) / static_cast<double>(n1)));
  }
  for (std::size_t i = 0; i < n2; ++i) {
    pts.push_back(Complex{0.5, 1.0} + std::polar(0.5, kPi * static_cast<double>(i) / static_cast<double>(n2 - 1)));
  }
  return CurveSamples::arc(std::move(pts));
}

Complex c1beta_tangent(double beta, double a, double s) {
  return std::polar(1.0, kPi + a * std::pow(s, beta));
}

CurveSamples c1beta(double beta, double a, double length, std::size_t n) {
  require(n, 2);
  if (!(beta > 0.0 && beta <= 2.0)) throw InputError("beta must lie in (0, 2]");
  if (!(length > 0.0)) throw InputError("length must be positive");
  if (!(std::abs(a) * std::pow(length, beta) < kPi / 2.0)) {
    throw InputError("total turning a L^beta must stay below pi/2");
  }
  // substitute s = u^q on each cell so the integrand is smooth at s = 0
  const double q = std::ceil(2.0 / beta);
  std::vector<Complex> pts(n);
  pts[0] = 0.0;
  Complex z = 0.0;
  const double h = length / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const double u0 = std::pow(h * static_cast<double>(i - 1), 1.0 / q);
    const double u1 = std::pow(h * static_cast<double>(i), 1.0 / q);
    const double mid = 0.5 * (u0 + u1);
    const double half = 0.5 * (u1 - u0);
    Complex acc = 0.0;
    for (std::size_t k = 0; k < kNodes.size(); ++k) {
      for (double sign : {-1.0, 1.0}) {
        const double u = mid + sign * half * kNodes[k];
        acc += kWeights[k] * q * std::pow(u, q - 1.0) * c1beta_tangent(beta, a, std::pow(u, q));
      }
    }
    z += half * acc;
    pts[i] = z;
  }
  return CurveSamples::arc(std::move(pts));
}

CurveSamples tangential_circle_arc(double radius, double length, std::size_t n) {
  require(n, 2);
  if (!(radius > 0.0) || !(length > 0.0) || length >= 2.0 * kPi * radius) {
    throw InputError("arc length must be positive and below one full turn");
  }
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = length * static_cast<double>(i) / static_cast<double>(n - 1);
    pts[i] = Complex{0.0, radius} * (std::polar(1.0, s / radius) - 1.0);
  }
  pts[0] = 0.0;
  return CurveSamples::arc(std::move(pts));
}

CurveSamples straight_continuation(double length, std::size_t n) {
  require(n, 2);
  std::vector<Complex> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {-length * static_cast<double>(i) / static_cast<double>(n - 1), 0.0};
  return CurveSamples::arc(std::move(pts));
}

}  // namespace loewner::catalog
