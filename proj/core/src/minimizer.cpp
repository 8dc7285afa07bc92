#include "loewner/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "loewner/error.hpp"
#include "loewner/tracer.hpp"
#include "loewner/zipper.hpp"

namespace loewner {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- chord ----

class ChordProblem {
 public:
  ChordProblem(double phi, const ChordOptions& options) : phi_(phi), options_(options) {
    const std::size_t n = options.cells;
    t_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double u = 1.0 - static_cast<double>(i) / static_cast<double>(n);
      t_[i] = 1.0 - u * u;
    }
    t_.back() = 1.0;
  }

  const std::vector<double>& grid() const { return t_; }
  DrivingFunction driving(const std::vector<double>& w) const { return {t_, w}; }

  Complex tip(const std::vector<double>& w) const {
    return trace_curve(driving(w), options_.steps_per_unit).points.points().back();
  }
  double constraint(const std::vector<double>& w) const { return std::arg(tip(w)) - phi_; }
  double energy(const std::vector<double>& w) const { return dirichlet_energy(driving(w)); }

  std::vector<double> linear(double slope) const {
    std::vector<double> w(t_.size());
    for (std::size_t i = 0; i < t_.size(); ++i) w[i] = slope * t_[i];
    return w;
  }

  // A x = g for the energy Hessian restricted to W(1..n), W(0) = 0 held fixed
  std::vector<double> solve_hessian(const std::vector<double>& g) const {
    const std::size_t n = t_.size() - 1;
    std::vector<double> diag(n + 1, 0.0), off(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
      const double inv = 1.0 / (t_[i] - t_[i - 1]);
      diag[i] += inv;
      if (i < n) diag[i] += 1.0 / (t_[i + 1] - t_[i]);
      off[i] = i < n ? -1.0 / (t_[i + 1] - t_[i]) : 0.0;
    }
    std::vector<double> c(n + 1, 0.0), d(n + 1, 0.0), x(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
      const double lower = i > 1 ? off[i - 1] : 0.0;
      const double den = diag[i] - (i > 1 ? lower * c[i - 1] : 0.0);
      c[i] = off[i] / den;
      d[i] = (g[i] - (i > 1 ? lower * d[i - 1] : 0.0)) / den;
    }
    for (std::size_t i = n; i >= 1; --i) x[i] = d[i] - (i < n ? c[i] * x[i + 1] : 0.0);
    return x;
  }

 private:
  double phi_;
  ChordOptions options_;
  std::vector<double> t_;
};

// points f_T^{-1}(W_T + i y) above the tip of the curve traced by W
std::vector<Complex> traced_continuation(const DrivingFunction& W, int steps_per_unit, std::size_t count) {
  const std::vector<TiltedSlit> slits = loewner_substeps(W, steps_per_unit, W.total_capacity());
  const double T = W.total_capacity() - W.start();
  const double y_min = 0.05 * std::sqrt(T);
  const double y_max = 20.0 * std::sqrt(T);
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    const double y = y_min * std::pow(y_max / y_min, static_cast<double>(j - 1) / static_cast<double>(std::max<std::size_t>(count - 1, 1)));
    Complex z{0.0, y};
    for (std::size_t k = slits.size(); k-- > 0;) z = slits[k].grow(z + slits[k].driving_end());
    out.push_back(z + W.w().front());
  }
  return out;
}

// ---- loop ----

std::vector<Complex> join_rest(const std::vector<std::vector<Complex>>& arcs, std::size_t skip) {
  // arcs skip+1, ..., skip-1 (cyclically), from the end of arc `skip` back to its start
  std::vector<Complex> rest;
  const std::size_t m = arcs.size();
  for (std::size_t k = 1; k < m; ++k) {
    const auto& a = arcs[(skip + k) % m];
    rest.insert(rest.end(), a.begin(), a.end() - 1);
  }
  rest.push_back(arcs[skip].front());
  return rest;
}

CurveSamples join_loop(const std::vector<std::vector<Complex>>& arcs, std::vector<long long>* starts = nullptr) {
  std::vector<Complex> pts;
  if (starts) starts->clear();
  for (const auto& a : arcs) {
    if (starts) starts->push_back(static_cast<long long>(pts.size()));
    pts.insert(pts.end(), a.begin(), a.end() - 1);
  }
  return CurveSamples::loop(std::move(pts));
}

std::vector<Complex> resample_arc(const std::vector<Complex>& arc, std::size_t count) {
  std::vector<Complex> out = CurveSamples::arc(arc).resampled(std::max<std::size_t>(count, 3)).points();
  out.front() = arc.front();
  out.back() = arc.back();
  return out;
}

double polyline_distance(Complex p, const std::vector<Complex>& line) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    const Complex a = line[k], b = line[k + 1];
    const double lambda = std::clamp(std::real((p - a) * std::conj(b - a)) / std::norm(b - a), 0.0, 1.0);
    best = std::min(best, std::abs(a + lambda * (b - a) - p));
  }
  return best;
}

double arc_movement(const std::vector<Complex>& before, const std::vector<Complex>& after) {
  double move = 0.0;
  for (const Complex& p : after) move = std::max(move, polyline_distance(p, before));
  for (const Complex& p : before) move = std::max(move, polyline_distance(p, after));
  return move;
}

double arc_length(const std::vector<Complex>& a) {
  double s = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) s += std::abs(a[k] - a[k - 1]);
  return s;
}

double loop_energy_or_inf(const CurveSamples& loop, const std::vector<double>& schedule) {
  try {
    return loop_energy(loop, 0, schedule).extrapolated;
  } catch (const NonConvergenceError&) {
    return kInfiniteEnergy;
  }
}

// constraint points located on an initial curve: nearest samples, snapped onto the points
std::vector<std::vector<Complex>> split_initial(const CurveSamples& curve, const std::vector<Complex>& points) {
  const std::size_t n = curve.size();
  std::vector<std::size_t> index;
  for (const Complex& z : points) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(curve[i] - z) < std::abs(curve[best] - z)) best = i;
    }
    if (std::abs(curve[best] - z) > 2.0 * curve.max_spacing()) {
      throw InputError("initial curve does not pass through a constraint point");
    }
    index.push_back(best);
  }
  const std::size_t m = points.size();
  for (std::size_t k = 1; k < m; ++k) {
    const std::size_t prev = (index[k - 1] + n - index[0]) % n;
    const std::size_t here = (index[k] + n - index[0]) % n;
    if (here <= prev) throw InputError("initial curve visits the constraint points out of order");
  }
  std::vector<std::vector<Complex>> arcs(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t a = index[k];
    std::size_t b = index[(k + 1) % m];
    if (b <= a) b += n;
    std::vector<Complex>& arc = arcs[k];
    arc.push_back(points[k]);
    for (std::size_t i = a + 1; i < b; ++i) arc.push_back(curve[i % n]);
    arc.push_back(points[(k + 1) % m]);
  }
  return arcs;
}

}  // namespace

MinimizerResult minimize_chord_through_point(double phi, double r, const ChordOptions& options) {
  if (!(phi > 0.0 && phi < kPi)) throw InputError("phi must lie in (0, pi)");
  if (!(r > 0.0)) throw InputError("r must be positive");
  if (options.cells < 4) throw InputError("chord minimizer needs at least 4 cells");
  const ChordProblem problem(phi, options);
  const std::size_t n = options.cells;

  // linear start W = c t with the secant method on c
  double c0 = 0.0, c1 = phi < 0.5 * kPi ? 1.0 : -1.0;
  double f0 = problem.constraint(problem.linear(c0));
  double f1 = problem.constraint(problem.linear(c1));
  for (int it = 0; it < 60 && std::abs(f1) > 1e-12 && f1 != f0; ++it) {
    const double c2 = c1 - f1 * (c1 - c0) / (f1 - f0);
    c0 = c1;
    f0 = f1;
    c1 = c2;
    f1 = problem.constraint(problem.linear(c1));
  }
  std::vector<double> w = problem.linear(c1);

  MinimizerResult result;
  result.energy_history.push_back(problem.energy(w));
  for (int it = 0; it < options.max_iterations; ++it) {
    const double c = problem.constraint(w);
    std::vector<double> g(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(w[i]));
      std::vector<double> wp = w, wm = w;
      wp[i] += h;
      wm[i] -= h;
      g[i] = (problem.constraint(wp) - problem.constraint(wm)) / (2.0 * h);
    }
    const std::vector<double> x = problem.solve_hessian(g);
    double gx = 0.0, gw = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      gx += g[i] * x[i];
      gw += g[i] * w[i];
    }
    if (!(std::abs(gx) > 0.0)) break;
    const double lambda = (gw - c) / gx;

    const double mu = 10.0 * std::abs(lambda) + 1.0;
    const double merit = problem.energy(w) + mu * std::abs(c);
    double step = 1.0;
    std::vector<double> next(n + 1);
    for (int ls = 0; ls < 30; ++ls) {
      for (std::size_t i = 0; i <= n; ++i) next[i] = w[i] + step * (lambda * x[i] - w[i]);
      if (problem.energy(next) + mu * std::abs(problem.constraint(next)) < merit) break;
      step *= 0.5;
    }
    double move = 0.0;
    for (std::size_t i = 0; i <= n; ++i) move = std::max(move, std::abs(next[i] - w[i]));
    w = next;
    result.iterations = it + 1;
    result.energy_history.push_back(problem.energy(w));
    if (move < options.tolerance) {
      result.converged = true;
      break;
    }
  }

  const DrivingFunction W = problem.driving(w);
  const CurveTrace trace = trace_curve(W, options.steps_per_unit);
  std::vector<Complex> pts = trace.points.points();
  const double scale = r / std::abs(pts.back());
  for (const Complex& p : traced_continuation(W, options.steps_per_unit, options.continuation_samples)) pts.push_back(p);
  for (Complex& p : pts) p *= scale;
  result.constraint_index = {static_cast<long long>(trace.points.size() - 1)};
  result.curve = CurveSamples::arc(std::move(pts));
  result.energy = dirichlet_energy(W);
  result.stationarity = std::abs(problem.constraint(w));
  result.driving = W;
  return result;
}

CurveSamples hyperbolic_geodesic(const CurveSamples& arc, std::size_t count) {
  if (arc.size() < 3) throw InputError("geodesic complement needs an arc of at least 3 samples");
  if (count < 3) throw InputError("geodesic needs at least 3 samples");
  const Uniformization u = uniformize_arc(arc.points(), {});
  const Complex start = arc.points().back();  // -> 0
  const Complex end = arc.points().front();   // -> infinity
  const double scale = std::abs(end - start);
  const double close = 1e-3 * std::max(scale, arc.max_spacing());
  auto image = [&](double y) { return u.map.inverse(ComplexPoint(0.0, y)).value(); };

  double y_lo = 1.0, y_hi = 1.0;
  for (int k = 0; k < 200 && std::abs(image(y_lo) - start) > close; ++k) y_lo *= 0.5;
  for (int k = 0; k < 200 && std::abs(image(y_hi) - end) > close; ++k) y_hi *= 2.0;

  // fine log-uniform polyline, then equal arclength
  const std::size_t fine = std::max<std::size_t>(8 * count, 1024);
  std::vector<Complex> line{start};
  for (std::size_t j = 0; j < fine; ++j) {
    const double y = y_lo * std::pow(y_hi / y_lo, static_cast<double>(j) / static_cast<double>(fine - 1));
    const Complex p = image(y);
    if (std::abs(p - line.back()) > 0.0) line.push_back(p);
  }
  if (std::abs(end - line.back()) > 0.0) line.push_back(end);
  return CurveSamples::arc(resample_arc(line, count));
}

double geodesic_deviation(const std::vector<Complex>& arc, const std::vector<Complex>& rest) {
  if (arc.size() < 4) throw InputError("free arc needs at least 4 samples");
  // rest runs from arc.back() to arc.front(): its first point goes to infinity, its last to 0
  const std::vector<Complex> passengers(arc.begin() + 1, arc.end() - 2);
  const Uniformization u = uniformize_arc(rest, passengers);
  if (u.chord.size() < kMinSamples) throw RefinementError("free arc too coarse for a chordal energy");
  return dirichlet_energy(compute_driving(u.chord, false).driving);
}

MinimizerResult minimize_loop(const ConstraintSet& constraints, const LoopOptions& options) {
  const std::vector<Complex>& z = constraints.points;
  const std::size_t m = z.size();
  if (!constraints.closed) throw InputError("minimize_loop expects a closed constraint set");
  if (m < 3) throw InputError("minimize_loop needs at least 3 points");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(z[i] - z[j]) == 0.0) throw InputError("constraint points must be distinct");
    }
  }

  std::vector<std::vector<Complex>> arcs;
  if (constraints.initial_curve) {
    arcs = split_initial(*constraints.initial_curve, z);
  } else {
    for (std::size_t k = 0; k < m; ++k) arcs.push_back({z[k], z[(k + 1) % m]});
  }
  double total = 0.0;
  for (const auto& a : arcs) total += arc_length(a);
  auto count_for = [&](const std::vector<Complex>& a) {
    const double share = arc_length(a) / total * static_cast<double>(options.samples);
    return std::max<std::size_t>(static_cast<std::size_t>(std::lround(share)) + 1, kMinSamples);
  };
  for (auto& a : arcs) a = resample_arc(a, count_for(a));
  join_loop(arcs).check_simple();

  MinimizerResult result;
  double energy = loop_energy_or_inf(join_loop(arcs), options.eps_schedule);
  result.energy_history.push_back(energy);

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const std::vector<std::vector<Complex>> before = arcs;
    double move = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::vector<Complex> rest = join_rest(arcs, i);
      std::vector<Complex> replaced;
      try {
        replaced = hyperbolic_geodesic(CurveSamples::arc(rest), count_for(arcs[i])).points();
      } catch (const Error&) {
        ++result.rejected_steps;
        continue;
      }
      replaced.front() = arcs[i].front();
      replaced.back() = arcs[i].back();
      std::vector<Complex> old = arcs[i];
      arcs[i] = std::move(replaced);
      try {
        join_loop(arcs).check_simple();
      } catch (const GeometryError&) {
        arcs[i] = std::move(old);
        ++result.rejected_steps;
        continue;
      }
      move = std::max(move, arc_movement(old, arcs[i]));
    }
    // keep the sampling density even after the arcs changed length
    total = 0.0;
    for (const auto& a : arcs) total += arc_length(a);
    for (auto& a : arcs) a = resample_arc(a, count_for(a));

    const double next = loop_energy_or_inf(join_loop(arcs), options.eps_schedule);
    result.iterations = sweep + 1;
    if (next > energy) {
      arcs = before;
      ++result.rejected_steps;
      result.converged = move < options.tolerance * total;
      break;
    }
    energy = next;
    result.energy_history.push_back(energy);
    if (move < options.tolerance * total) {
      result.converged = true;
      break;
    }
  }

  result.curve = join_loop(arcs, &result.constraint_index);
  result.energy = energy;
  result.stationarity = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    result.stationarity = std::max(result.stationarity, geodesic_deviation(arcs[i], join_rest(arcs, i)));
  }
  return result;
}

RootSweep minimizer_root_sweep(const MinimizerResult& result, const std::vector<long long>& roots,
                               const std::vector<double>& eps_schedule) {
  if (!result.curve.closed()) throw InputError("root sweep expects a loop");
  RootSweep out;
  out.roots = roots;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (long long root : roots) {
    const double e = loop_energy(result.curve, root, eps_schedule).extrapolated;
    out.energies.push_back(e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    sum += e;
  }
  if (!roots.empty()) out.spread = (hi - lo) / std::max(sum / static_cast<double>(roots.size()), kMonotoneFloor);
  return out;
}

}  // namespace loewner
