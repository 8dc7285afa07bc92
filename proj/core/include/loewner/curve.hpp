#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "loewner/maps.hpp"

namespace loewner {

/// Ordered samples of a simple arc or a Jordan loop.
///
/// For loops the wraparound segment points.back() -> points.front() is implicit.
class CurveSamples {
 public:
  CurveSamples() = default;
  CurveSamples(std::vector<Complex> points, bool closed);

  static CurveSamples arc(std::vector<Complex> points) { return {std::move(points), false}; }
  static CurveSamples loop(std::vector<Complex> points) { return {std::move(points), true}; }

  const std::vector<Complex>& points() const noexcept { return points_; }
  const std::vector<double>& arclength() const noexcept { return arclength_; }
  bool closed() const noexcept { return closed_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  Complex operator[](std::size_t i) const { return points_[i]; }
  /// Index taken modulo the size for loops.
  Complex at(long long i) const;
  /// Total length, including the closing segment of a loop.
  double length() const noexcept { return length_; }
  /// Largest distance between consecutive samples.
  double max_spacing() const;

  /// Throws GeometryError when two non-adjacent segments intersect.
  void check_simple() const;

  CurveSamples reversed() const;
  /// Piecewise-linear resampling at `count` points equally spaced in arclength.
  CurveSamples resampled(std::size_t count) const;
  /// Samples first..last (inclusive), indices taken modulo the size for loops.
  CurveSamples sub_arc(long long first, long long last) const;

 private:
  std::vector<Complex> points_;
  std::vector<double> arclength_;
  bool closed_ = false;
  double length_ = 0.0;
};

/// Driving function sampled on a capacity grid; linear between grid points.
class DrivingFunction {
 public:
  DrivingFunction() = default;
  DrivingFunction(std::vector<double> t, std::vector<double> w);

  /// Uniform grid with n cells on [t0, t1].
  static DrivingFunction sample(const std::function<double(double)>& f, double t1, std::size_t n, double t0 = 0.0);

  const std::vector<double>& t() const noexcept { return t_; }
  const std::vector<double>& w() const noexcept { return w_; }
  std::size_t size() const noexcept { return t_.size(); }
  double total_capacity() const { return t_.empty() ? 0.0 : t_.back(); }
  double start() const { return t_.front(); }
  double operator()(double t) const;
  /// Restriction to [a, b]; interpolated endpoints are inserted.
  DrivingFunction restricted(double a, double b) const;

 private:
  std::vector<double> t_;
  std::vector<double> w_;
};

/// Points of a Loewner trace together with their capacity times.
struct CurveTrace {
  CurveSamples points;
  std::vector<double> t_of_point;
};

}  // namespace loewner
