#include "loewner/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loewner/error.hpp"

namespace loewner {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

// ---------------------------------------------------------------------------
// Mobius maps

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(scale > 0.0) || std::abs(a * d - b * c) <= 1e-14 * scale * scale) {
    throw DomainError("degenerate Mobius map (ad - bc = 0)");
  }
}

MobiusMap MobiusMap::cross_ratio(Complex z1, Complex z2, Complex z3) {
  // (z - z1)(z2 - z3) / ((z - z3)(z2 - z1))
  return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

ComplexPoint MobiusMap::operator()(const ComplexPoint& z) const {
  if (z.is_infinite()) {
    if (c_ == Complex{0.0}) return ComplexPoint::infinity();
    return ComplexPoint(a_ / c_);
  }
  const Complex den = c_ * z.value() + d_;
  if (den == Complex{0.0}) return ComplexPoint::infinity();
  return ComplexPoint((a_ * z.value() + b_) / den);
}

Complex MobiusMap::apply(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == Complex{0.0}) throw DomainError("Mobius map evaluated at its pole");
  return (a_ * z + b_) / den;
}

Complex MobiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  return determinant() / (den * den);
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
          c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
}

// ---------------------------------------------------------------------------
// Straight-slit driving law

double k_of_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kPi / 4.0)) {
    throw DomainError("k_of_theta: theta must lie in [0, pi/4]");
  }
  return k_of_theta_signed(theta);
}

double theta_of_k(double k) {
  if (!std::isfinite(k)) throw DomainError("theta_of_k: non-finite k");
  return 0.5 * kPi * k / std::sqrt(k * k + 16.0);
}

double k_of_theta_signed(double theta) {
  if (!(std::abs(theta) < kPi / 2.0)) {
    throw DomainError("k_of_theta_signed: |theta| must be below pi/2");
  }
  return 8.0 * theta / std::sqrt(kPi * kPi - 4.0 * theta * theta);
}

Complex B_of_k(double k) {
  if (!(k >= 0.0)) throw DomainError("B_of_k: k must be nonnegative");
  const double r = std::sqrt(k * k + 16.0);
  const double modulus = 2.0 * std::pow((r + k) / (r - k), k / (2.0 * r));
  return std::polar(modulus, kPi / 2.0 - theta_of_k(k));
}

// ---------------------------------------------------------------------------
// Branches

Complex sqrt_branch(Complex z) {
  if (z.imag() == 0.0 && z.real() > 0.0) {
    throw DomainError("sqrt_branch: argument on the branch cut (0, inf)");
  }
  return sqrt_upper(z);
}

Complex sqrt_upper(Complex z) {
  if (z.imag() == 0.0) {
    // covers -0.0 as well
    return z.real() >= 0.0 ? Complex{std::sqrt(z.real()), 0.0} : Complex{0.0, std::sqrt(-z.real())};
  }
  Complex w = std::sqrt(z);
  if (w.imag() < 0.0) w = -w;
  return w;
}

Complex log_upper(Complex z) {
  const double im = z.imag() > 0.0 ? z.imag() : 0.0;
  return {std::log(std::abs(z)), std::atan2(im, z.real())};
}

// ---------------------------------------------------------------------------
// Tilted slit

TiltedSlit::TiltedSlit(double k, double dt, double base) : k_(k), dt_(dt), base_(base) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw DomainError("TiltedSlit: dt must be finite and >= 0");
  if (!std::isfinite(k) || !std::isfinite(base)) throw DomainError("TiltedSlit: non-finite parameter");
  theta_ = theta_of_k(k);
  const double r = std::sqrt(k * k + 16.0);
  alpha_ = 0.5 - 0.5 * k / r;
  if (dt_ == 0.0) return;
  // alpha (1 - alpha) = 4 / (k^2 + 16), so the scale is s = sqrt(dt (k^2 + 16)).
  const double s = std::sqrt(dt) * r;
  p_ = (1.0 - alpha_) * s;
  q_ = alpha_ * s;
  w_tip_ = k * std::sqrt(dt);
  const double modulus = s * std::pow(alpha_, alpha_) * std::pow(1.0 - alpha_, 1.0 - alpha_);
  tip_ = std::polar(modulus, kPi * alpha_);
}

TiltedSlit TiltedSlit::through(double base, Complex tip) {
  const Complex rel = tip - base;
  if (!(rel.imag() > 0.0)) throw DomainError("TiltedSlit::through: tip must lie in the open upper half-plane");
  const double alpha = std::arg(rel) / kPi;
  const double ratio = std::pow(alpha, alpha) * std::pow(1.0 - alpha, 1.0 - alpha);
  const double s = std::abs(rel) / ratio;
  const double dt = alpha * (1.0 - alpha) * s * s / 4.0;
  const double k = (1.0 - 2.0 * alpha) * s / std::sqrt(dt);
  TiltedSlit slit(k, dt, base);
  // keep the requested tip exactly; the parameters reproduce it to rounding
  slit.tip_ = rel;
  return slit;
}

Complex TiltedSlit::log_grow(Complex w_rel) const {
  return alpha_ * log_upper(w_rel - p_) + (1.0 - alpha_) * log_upper(w_rel + q_);
}

Complex TiltedSlit::log_grow_derivative(Complex w_rel) const {
  return alpha_ / (w_rel - p_) + (1.0 - alpha_) / (w_rel + q_);
}

Complex TiltedSlit::grow(Complex w) const {
  if (is_identity()) return w;
  const Complex rel = w - base_;
  if (rel == Complex{p_} || rel == Complex{-q_}) return base_;
  return base_ + std::exp(log_grow(rel));
}

Complex TiltedSlit::grow_derivative(Complex w) const {
  if (is_identity()) return 1.0;
  const Complex rel = w - base_;
  return std::exp(log_grow(rel)) * log_grow_derivative(rel);
}

double TiltedSlit::boundary_modulus(double w_rel) const {
  return std::pow(std::abs(w_rel - p_), alpha_) * std::pow(std::abs(w_rel + q_), 1.0 - alpha_);
}

double TiltedSlit::map_out_boundary(Complex z, SlitSide side) const {
  if (is_identity()) return z.real();
  const double rho = std::abs(z - base_);
  const double tip_modulus = std::abs(tip_);
  if (rho >= tip_modulus) return base_ + w_tip_;
  // |F| increases from 0 at -q to |tip| at w_tip, then decreases to 0 at p.
  double lo = side == SlitSide::Left ? -q_ : w_tip_;
  double hi = side == SlitSide::Left ? w_tip_ : p_;
  const bool increasing = side == SlitSide::Left;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * (p_ + q_); ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = boundary_modulus(mid) < rho;
    if (below == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return base_ + 0.5 * (lo + hi);
}

double TiltedSlit::solve_real(double x_rel) const {
  // F is increasing on (p, inf) with F(p) = 0 and on (-inf, -q) with F(-q) = 0; |F(w)| >= |w - p|, |w + q|.
  double lo = 0.0;
  double hi = 0.0;
  if (x_rel > 0.0) {
    lo = p_;
    hi = p_ + x_rel;
  } else {
    lo = -q_ + x_rel;
    hi = -q_;
  }
  auto value = [&](double w) {
    const double m = boundary_modulus(w);
    return w > 0.0 ? m : -m;
  };
  double w = std::clamp(x_rel + 2.0 * dt_ / x_rel, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double f = value(w) - x_rel;
    if (f > 0.0) {
      hi = w;
    } else {
      lo = w;
    }
    const double scale = std::max(std::abs(x_rel), p_ + q_);
    if (std::abs(f) <= 1e-15 * scale || hi - lo <= 1e-15 * scale) break;
    const double deriv = std::abs(value(w)) * std::abs(alpha_ / (w - p_) + (1.0 - alpha_) / (w + q_));
    double next = w - f / deriv;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    w = next;
  }
  return w;
}

Complex TiltedSlit::map_out(Complex z) const {
  if (is_identity()) return z;
  const Complex rel = z - base_;
  if (rel == Complex{0.0}) return base_ + p_;
  if (rel.imag() <= 0.0) {
    // real axis: solve on the matching half-line
    return base_ + solve_real(rel.real());
  }

  const Complex target = log_upper(rel);
  auto residual = [&](Complex w) { return log_grow(w) - target; };

  // candidate starting points: vertical-slit inverse, identity, local quadratic inverse at the tip
  Complex candidates[3];
  candidates[0] = sqrt_upper(rel * rel + 4.0 * dt_);
  candidates[1] = rel + 2.0 * dt_ / rel;
  {
    const Complex w_tip{w_tip_, 0.0};
    const Complex second = tip_ * (-alpha_ / ((w_tip - p_) * (w_tip - p_)) -
                                   (1.0 - alpha_) / ((w_tip + q_) * (w_tip + q_)));
    candidates[2] = w_tip + sqrt_upper(2.0 * (rel - tip_) / second);
  }
  // near the slit both sides have almost the same logarithm: seed from each side's boundary preimage
  Complex side_candidates[2];
  int n_side = 0;
  if (std::abs(rel) < std::abs(tip_)) {
    for (SlitSide side : {SlitSide::Left, SlitSide::Right}) {
      const double wb = map_out_boundary(z, side) - base_;
      const Complex wc{wb, 0.0};
      const Complex d = std::exp(log_grow(wc)) * log_grow_derivative(wc);
      const double lift = std::abs(rel - std::exp(log_grow(wc))) / std::max(std::abs(d), 1e-300);
      side_candidates[n_side++] = Complex{wb, std::isfinite(lift) ? lift : 0.0};
    }
  }
  Complex w = candidates[0];
  double best = std::abs(residual(w));
  auto consider = [&](const Complex& c) {
    if (c.imag() < 0.0 || !std::isfinite(c.real()) || !std::isfinite(c.imag())) return;
    const double r = std::abs(residual(c));
    if (r < best) {
      best = r;
      w = c;
    }
  };
  for (const Complex& c : candidates) consider(c);
  for (int i = 0; i < n_side; ++i) consider(side_candidates[i]);

  const double scale = p_ + q_;
  Complex g = residual(w);
  for (int it = 0; it < 100; ++it) {
    const double gnorm = std::abs(g);
    if (gnorm <= 4e-16) break;
    const Complex step = -g / log_grow_derivative(w);
    double lambda = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      Complex trial = w + lambda * step;
      if (trial.imag() < 0.0) trial.imag(0.0);
      const Complex gt = residual(trial);
      if (std::abs(gt) < gnorm) {
        w = trial;
        g = gt;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) break;
    if (std::abs(lambda * step) <= 1e-16 * (std::abs(w) + scale)) break;
  }
  return base_ + w;
}

}  // namespace loewner
