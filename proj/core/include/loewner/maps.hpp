#pragma once

#include <complex>
#include <numbers>

namespace loewner {

using Complex = std::complex<double>;

/// Default absolute tolerance for map round trips.
inline constexpr double kDefaultTolerance = 1e-9;

/// A point of the Riemann sphere: a finite complex number or the point at infinity.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  ComplexPoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  ComplexPoint(double re, double im) : z_(re, im) {}

  static ComplexPoint infinity() {
    ComplexPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; unspecified for the point at infinity.
  Complex value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }

  bool near(const ComplexPoint& other, double tol = kDefaultTolerance) const {
    if (infinite_ || other.infinite_) return infinite_ && other.infinite_;
    return std::abs(z_ - other.z_) <= tol;
  }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// z -> (a z + b) / (c z + d), nondegenerate.
class MobiusMap {
 public:
  MobiusMap() = default;  // identity
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {}; }
  static MobiusMap translation(Complex shift) { return {1.0, shift, 0.0, 1.0}; }
  static MobiusMap scaling(Complex factor) { return {factor, 0.0, 0.0, 1.0}; }
  /// The unique map sending (z1, z2, z3) to (0, 1, infinity).
  static MobiusMap cross_ratio(Complex z1, Complex z2, Complex z3);

  ComplexPoint operator()(const ComplexPoint& z) const;
  /// Finite evaluation; throws DomainError when z is the pole.
  Complex apply(Complex z) const;
  Complex derivative(Complex z) const;

  MobiusMap inverse() const;
  /// (*this) after `inner`, i.e. z -> this(inner(z)).
  MobiusMap compose(const MobiusMap& inner) const;

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }
  Complex determinant() const { return a_ * d_ - b_ * c_; }

 private:
  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

/// k(theta) = 8 theta / sqrt(pi^2 - 4 theta^2) on 0 <= theta <= pi/4.
double k_of_theta(double theta);

/// Tilt from the vertical of the ray generated by the driving function k sqrt(t);
/// defined for every real k, odd in k, with |theta| < pi/2.
double theta_of_k(double k);

/// Inverse of theta_of_k over the whole family, |theta| < pi/2.
double k_of_theta_signed(double theta);

/// Capacity-parametrized position factor: the ray driven by k sqrt(t) is B(k) sqrt(t).
Complex B_of_k(double k);

/// Square root on C \ (0, inf) with values in the closed upper half-plane.
/// Throws DomainError on the open positive real axis.
Complex sqrt_branch(Complex z);

/// Same branch, but the positive real axis is read from its upper side (returns +sqrt(x)).
Complex sqrt_upper(Complex z);

/// log with argument in [0, pi] for points of the closed upper half-plane.
/// Points with slightly negative imaginary part are read as lying on the real axis.
Complex log_upper(Complex z);

enum class SlitSide { Left, Right };

/// Hydrodynamically normalized conformal map of H onto H minus a straight slit of
/// half-plane capacity 2 dt attached at `base` with tilt theta from the vertical.
///
/// The slit is generated by the driving function base + k sqrt(t), t in [0, dt].
/// Internally the growing map is w -> base + (w' - p)^alpha (w' + q)^(1 - alpha) with
/// w' = w - base, alpha = 1/2 - theta/pi and alpha p = (1 - alpha) q so that the
/// expansion at infinity has no constant term.
class TiltedSlit {
 public:
  TiltedSlit() = default;  // dt = 0: identity
  /// Slit generated by the driving increment k sqrt(t) over capacity dt.
  TiltedSlit(double k, double dt, double base = 0.0);

  /// The slit from `base` (real) to `tip` (open upper half-plane).
  static TiltedSlit through(double base, Complex tip);

  double k() const noexcept { return k_; }
  double theta() const noexcept { return theta_; }
  double dt() const noexcept { return dt_; }
  double base() const noexcept { return base_; }
  double alpha() const noexcept { return alpha_; }
  /// Driving value at the end of the slit: base + k sqrt(dt).
  double driving_end() const noexcept { return base_ + w_tip_; }
  Complex tip() const noexcept { return base_ + tip_; }
  /// Real preimage interval [left, right] of the two slit sides.
  double preimage_left() const noexcept { return base_ - q_; }
  double preimage_right() const noexcept { return base_ + p_; }

  /// H -> H \ slit (growing direction).
  Complex grow(Complex w) const;
  Complex grow_derivative(Complex w) const;
  /// H \ slit -> H (mapping-out direction); Newton on the logarithmic form.
  Complex map_out(Complex z) const;
  /// Preimage of a point on the slit, seen from one side.
  double map_out_boundary(Complex z, SlitSide side) const;

  bool is_identity() const noexcept { return dt_ <= 0.0; }

 private:
  Complex log_grow(Complex w_rel) const;  // log of the local growing map
  Complex log_grow_derivative(Complex w_rel) const;
  double boundary_modulus(double w_rel) const;
  double solve_real(double x_rel) const;

  double k_ = 0.0, theta_ = 0.0, dt_ = 0.0, base_ = 0.0;
  double alpha_ = 0.5, p_ = 0.0, q_ = 0.0, w_tip_ = 0.0;
  Complex tip_{};
};

}  // namespace loewner
