#include "loewner/curve.hpp"

#include <algorithm>
#include <cmath>

#include "loewner/error.hpp"

namespace loewner {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// closed segments [a,b] and [c,d]
bool segments_intersect(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  auto on_segment = [](Complex p, Complex q, Complex r, double dd) {
    return dd == 0.0 && std::min(p.real(), q.real()) <= r.real() && r.real() <= std::max(p.real(), q.real()) &&
           std::min(p.imag(), q.imag()) <= r.imag() && r.imag() <= std::max(p.imag(), q.imag());
  };
  return on_segment(a, b, c, d1) || on_segment(a, b, d, d2) || on_segment(c, d, a, d3) || on_segment(c, d, b, d4);
}

}  // namespace

CurveSamples::CurveSamples(std::vector<Complex> points, bool closed) : points_(std::move(points)), closed_(closed) {
  arclength_.resize(points_.size());
  double s = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Complex p = points_[i];
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw InputError("curve sample is not finite");
    if (i > 0) {
      const double step = std::abs(p - points_[i - 1]);
      if (step == 0.0) throw GeometryError("repeated consecutive sample", i);
      s += step;
    }
    arclength_[i] = s;
  }
  length_ = s;
  if (closed_ && points_.size() > 1) {
    const double step = std::abs(points_.front() - points_.back());
    if (step == 0.0) throw InputError("closed curve stores its first point twice");
    length_ += step;
  }
}

Complex CurveSamples::at(long long i) const {
  const long long n = static_cast<long long>(points_.size());
  if (closed_) {
    i %= n;
    if (i < 0) i += n;
  }
  return points_.at(static_cast<std::size_t>(i));
}

double CurveSamples::max_spacing() const {
  double h = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) h = std::max(h, std::abs(points_[i] - points_[i - 1]));
  if (closed_ && points_.size() > 1) h = std::max(h, std::abs(points_.front() - points_.back()));
  return h;
}

void CurveSamples::check_simple() const {
  const std::size_t n = points_.size();
  const std::size_t segs = closed_ ? n : (n == 0 ? 0 : n - 1);
  // bounding boxes make this fast enough for a few thousand samples
  for (std::size_t i = 0; i < segs; ++i) {
    const Complex a = points_[i];
    const Complex b = points_[(i + 1) % n];
    const double xlo = std::min(a.real(), b.real()), xhi = std::max(a.real(), b.real());
    const double ylo = std::min(a.imag(), b.imag()), yhi = std::max(a.imag(), b.imag());
    for (std::size_t j = i + 2; j < segs; ++j) {
      if (closed_ && i == 0 && j == segs - 1) continue;  // adjacent through the wraparound
      const Complex c = points_[j];
      const Complex d = points_[(j + 1) % n];
      if (std::max(c.real(), d.real()) < xlo || std::min(c.real(), d.real()) > xhi ||
          std::max(c.imag(), d.imag()) < ylo || std::min(c.imag(), d.imag()) > yhi) {
        continue;
      }
      if (segments_intersect(a, b, c, d)) throw GeometryError("curve is not simple", j);
    }
  }
}

CurveSamples CurveSamples::reversed() const {
  std::vector<Complex> pts(points_.rbegin(), points_.rend());
  return {std::move(pts), closed_};
}

CurveSamples CurveSamples::resampled(std::size_t count) const {
  if (count < 2 || points_.size() < 2) throw InputError("resampling needs at least two points");
  std::vector<Complex> nodes = points_;
  std::vector<double> s = arclength_;
  if (closed_) {
    nodes.push_back(points_.front());
    s.push_back(length_);
  }
  const double total = s.back();
  const std::size_t denom = closed_ ? count : count - 1;
  std::vector<Complex> out;
  out.reserve(count);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double target = total * static_cast<double>(i) / static_cast<double>(denom);
    while (seg + 2 < s.size() && s[seg + 1] < target) ++seg;
    const double len = s[seg + 1] - s[seg];
    const double lambda = std::clamp((target - s[seg]) / len, 0.0, 1.0);
    out.push_back(nodes[seg] + lambda * (nodes[seg + 1] - nodes[seg]));
  }
  return {std::move(out), closed_};
}

CurveSamples CurveSamples::sub_arc(long long first, long long last) const {
  if (last < first) throw InputError("sub_arc: empty range");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(last - first + 1));
  for (long long i = first; i <= last; ++i) pts.push_back(at(i));
  return CurveSamples::arc(std::move(pts));
}

DrivingFunction::DrivingFunction(std::vector<double> t, std::vector<double> w) : t_(std::move(t)), w_(std::move(w)) {
  if (t_.size() != w_.size()) throw InputError("driving function: t and W differ in length");
  if (t_.size() < 2) throw InputError("driving function needs at least two samples");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!std::isfinite(t_[i]) || !std::isfinite(w_[i])) throw InputError("driving function has non-finite values");
    if (i > 0 && !(t_[i] > t_[i - 1])) throw InputError("driving function grid is not strictly increasing");
  }
}

DrivingFunction DrivingFunction::sample(const std::function<double(double)>& f, double t1, std::size_t n, double t0) {
  if (n < 1 || !(t1 > t0)) throw InputError("driving function sampling: empty interval");
  std::vector<double> t(n + 1), w(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n);
    w[i] = f(t[i]);
  }
  t[n] = t1;
  return {std::move(t), std::move(w)};
}

double DrivingFunction::operator()(double t) const {
  if (t <= t_.front()) return w_.front();
  if (t >= t_.back()) return w_.back();
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - t_.begin());
  const double lambda = (t - t_[j - 1]) / (t_[j] - t_[j - 1]);
  return w_[j - 1] + lambda * (w_[j] - w_[j - 1]);
}

DrivingFunction DrivingFunction::restricted(double a, double b) const {
  if (!(b > a)) throw InputError("restricted: empty interval");
  a = std::max(a, t_.front());
  b = std::min(b, t_.back());
  std::vector<double> t{a}, w{(*this)(a)};
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i] > a && t_[i] < b) {
      t.push_back(t_[i]);
      w.push_back(w_[i]);
    }
  }
  t.push_back(b);
  w.push_back((*this)(b));
  return {std::move(t), std::move(w)};
}

}  // namespace loewner
