#include "loewner/tracer.hpp"

#include <cmath>

#include "loewner/error.hpp"

namespace loewner {

namespace {

constexpr int kMaxSplitDepth = 24;

void push_increment(std::vector<TiltedSlit>& out, double dw, double dt, int depth) {
  const double k = dw / std::sqrt(dt);
  if (std::abs(k) <= kMaxSlitSlope) {
    out.emplace_back(k, dt);
    return;
  }
  if (depth >= kMaxSplitDepth) {
    throw RefinementError("driving increment too steep for the slit family; refine the grid");
  }
  push_increment(out, 0.5 * dw, 0.5 * dt, depth + 1);
  push_increment(out, 0.5 * dw, 0.5 * dt, depth + 1);
}

}  // namespace

std::vector<TiltedSlit> loewner_substeps(const DrivingFunction& W, int steps_per_unit, double t_end,
                                         std::vector<std::size_t>& cell_end) {
  if (steps_per_unit < 2) throw InputError("step budget must be at least 2");
  const auto& t = W.t();
  const auto& w = W.w();
  std::vector<TiltedSlit> out;
  cell_end.clear();
  for (std::size_t i = 1; i < t.size() && t[i - 1] < t_end; ++i) {
    double t1 = t[i];
    double w1 = w[i];
    if (t1 > t_end) {
      t1 = t_end;
      w1 = W(t_end);
    }
    const double dt = t1 - t[i - 1];
    const double dw = w1 - w[i - 1];
    const auto m = static_cast<long long>(std::max(1.0, std::ceil(dt * steps_per_unit - 1e-9)));
    for (long long j = 0; j < m; ++j) {
      push_increment(out, dw / static_cast<double>(m), dt / static_cast<double>(m), 0);
    }
    cell_end.push_back(out.size() - 1);
  }
  return out;
}

std::vector<TiltedSlit> loewner_substeps(const DrivingFunction& W, int steps_per_unit, double t_end) {
  std::vector<std::size_t> cell_end;
  return loewner_substeps(W, steps_per_unit, t_end, cell_end);
}

CurveTrace trace_curve(const DrivingFunction& W, int steps_per_unit) {
  for (double v : W.w()) {
    if (std::isnan(v)) throw InputError("driving function contains NaN");
  }
  std::vector<std::size_t> cell_end;
  const std::vector<TiltedSlit> slits = loewner_substeps(W, steps_per_unit, W.total_capacity(), cell_end);
  const double w0 = W.w().front();

  std::vector<Complex> pts{Complex{w0, 0.0}};
  pts.reserve(cell_end.size() + 1);
  for (std::size_t n : cell_end) {
    Complex z = slits[n].tip();
    for (std::size_t j = n; j-- > 0;) z = slits[j].grow(z + slits[j].driving_end());
    pts.push_back(z + w0);
  }
  CurveTrace trace;
  trace.t_of_point = W.t();
  trace.points = CurveSamples::arc(std::move(pts));
  return trace;
}

Complex evolve_point(const DrivingFunction& W, Complex z, double t_end, int steps_per_unit) {
  if (!(t_end >= W.start()) || t_end > W.total_capacity() * (1.0 + 1e-12)) {
    throw InputError("evolve_point: t_end outside the driving interval");
  }
  if (t_end <= W.start()) return z;
  const std::vector<TiltedSlit> slits = loewner_substeps(W, steps_per_unit, t_end);
  const bool interior = z.imag() > 0.0;
  Complex u = z - W.w().front();
  double t = W.start();
  for (const TiltedSlit& s : slits) {
    u = s.map_out(u) - s.driving_end();
    t += s.dt();
    if (interior && u.imag() <= 1e-12 * (1.0 + std::abs(u))) {
      throw SwallowedError("point absorbed by the hull", t);
    }
  }
  return u + W(t_end);
}

}  // namespace loewner
