#include "loewner/energy.hpp"

#include <algorithm>
#include <cmath>

#include "loewner/error.hpp"

namespace loewner {

namespace {

constexpr std::size_t kMinBandCells = 4;
constexpr double kBandRatioFloor = 0.9;  // band energy may drop at most 10% per level
constexpr int kEndRefinementLevels = 10;

long long eps_to_samples(double eps, std::size_t n) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps values must lie in (0, 1)");
  return std::max<long long>(2, std::llround(eps * static_cast<double>(n)));
}

void check_schedule(const std::vector<double>& schedule) {
  if (schedule.empty()) throw InputError("empty eps schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i] < schedule[i - 1])) throw InputError("eps schedule must be decreasing");
  }
}

// from + 2^-j (to - from) for j = levels .. 1: a geometric approach to `from` along a segment
std::vector<Complex> geometric_approach(Complex from, Complex to, int levels) {
  std::vector<Complex> out;
  for (int j = levels; j >= 1; --j) out.push_back(from + std::ldexp(1.0, -j) * (to - from));
  return out;
}

LoopEnergyReport finish_report(LoopEnergyReport report) {
  const auto& e = report.partial_energies;
  for (std::size_t i = 1; i < e.size(); ++i) {
    const double slack = kMonotoneSlack * std::max(std::abs(e[i - 1]), kMonotoneFloor);
    if (e[i] < e[i - 1] - slack) report.monotone = false;
  }
  report.tail_estimate = richardson_tail(e);
  report.extrapolated = e.back() + report.tail_estimate;
  if (!report.monotone) {
    throw NonConvergenceError("eps-partials are not monotone within the slack", report.partial_energies);
  }
  return report;
}

}  // namespace

double dirichlet_energy(const DrivingFunction& W) {
  const auto& t = W.t();
  const auto& w = W.w();
  double sum = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double dw = w[i] - w[i - 1];
    sum += dw * dw / (t[i] - t[i - 1]);
  }
  return 0.5 * sum;
}

EnergyReport chordal_energy(const DrivingFunction& W) {
  EnergyReport report;
  report.finite_value = dirichlet_energy(W);
  report.value = report.finite_value;
  const auto& t = W.t();
  for (std::size_t i = 1; i < t.size(); ++i) report.grid_resolution = std::max(report.grid_resolution, t[i] - t[i - 1]);

  const double T = W.total_capacity();
  for (int j = 0; j < 200; ++j) {
    const double hi = T * std::ldexp(1.0, -j);
    const double lo = 0.5 * hi;
    if (lo < W.start()) break;
    const auto first = std::upper_bound(t.begin(), t.end(), lo);
    const auto last = std::lower_bound(t.begin(), t.end(), hi);
    if (static_cast<std::size_t>(last - first) + 1 < kMinBandCells) break;
    report.band_energies.push_back(dirichlet_energy(W.restricted(lo, hi)));
  }

  const auto& b = report.band_energies;
  const double peak = b.empty() ? 0.0 : *std::max_element(b.begin(), b.end());
  if (b.size() >= 4 && peak > 1e-12) {
    bool growing = true;
    double log_ratio = 0.0;
    for (std::size_t j = b.size() - 3; j < b.size(); ++j) {
      const double ratio = b[j] / std::max(b[j - 1], 1e-300);
      if (ratio < kBandRatioFloor) growing = false;
      log_ratio += std::log2(std::max(ratio, 1e-300));
    }
    report.divergence_exponent = -log_ratio / 3.0;
    if (growing) {
      report.diverged = true;
      report.value = kInfiniteEnergy;
    }
  }
  return report;
}

double richardson_tail(const std::vector<double>& e) {
  if (e.size() < 3) return 0.0;
  const std::size_t n = e.size();
  const double d1 = e[n - 1] - e[n - 2];
  const double d0 = e[n - 2] - e[n - 3];
  if (!(d0 > 0.0) || !(d1 > 0.0)) return 0.0;
  const double r = d1 / d0;
  if (r >= kMaxTailRatio) return 0.0;
  return d1 * r / (1.0 - r);
}

LoopEnergyReport loop_energy(const CurveSamples& loop, long long root_index, const std::vector<double>& eps_schedule) {
  if (!loop.closed()) throw InputError("loop_energy expects a closed curve");
  if (loop.size() < kMinSamples) throw InputError("loop needs at least 8 samples");
  check_schedule(eps_schedule);
  loop.check_simple();
  LoopEnergyReport report;
  report.root_index = root_index;
  report.eps_schedule = eps_schedule;
  for (double eps : eps_schedule) {
    const long long m = eps_to_samples(eps, loop.size());
    const Uniformization u = uniformize_slit_complement(loop, root_index, root_index + m);
    const DrivingExtraction ex = compute_driving(u.chord, false);
    report.eps_samples.push_back(m);
    report.partial_energies.push_back(dirichlet_energy(ex.driving));
  }
  return finish_report(std::move(report));
}

double two_slit_energy(const CurveSamples& first, const std::vector<Complex>& rest) {
  std::vector<Complex> carried = rest;
  std::vector<std::size_t> sample_end;
  std::vector<Complex> samples = first.points();
  const double base = samples.front().real();
  samples.front().imag(0.0);
  const std::vector<TiltedSlit> slits = unzip(samples, carried, &sample_end);
  double energy = 0.0;
  {
    double w = 0.0;
    std::vector<double> ts{0.0}, ws{0.0};
    double t = 0.0;
    std::size_t next = 0;
    for (std::size_t i = 0; i < slits.size(); ++i) {
      t += slits[i].dt();
      w += slits[i].driving_end();
      if (i + 1 == sample_end[next]) {
        ts.push_back(t);
        ws.push_back(w);
        ++next;
      }
    }
    energy += dirichlet_energy(DrivingFunction(std::move(ts), std::move(ws)));
  }
  if (carried.empty()) return energy;
  // unzipping is centered: the tip of `first` ends at `base`
  const double tip = base;
  std::vector<Complex> second{Complex{0.0, 0.0}};
  second.reserve(carried.size() + 1);
  for (const Complex& p : carried) second.push_back(-1.0 / (p - tip));
  const DrivingExtraction ex = compute_driving(CurveSamples::arc(std::move(second)), false);
  return energy + dirichlet_energy(ex.driving);
}

LoopEnergyReport arc_energy(const CurveSamples& arc, long long root_index, const std::vector<double>& eps_schedule) {
  if (arc.closed()) throw InputError("arc_energy expects an open arc");
  const long long n = static_cast<long long>(arc.size());
  if (n < static_cast<long long>(kMinSamples)) throw InputError("arc needs at least 8 samples");
  if (root_index < 0 || root_index >= n) throw InputError("root index outside the arc");
  check_schedule(eps_schedule);
  arc.check_simple();
  if (root_index == n - 1) {
    LoopEnergyReport r = arc_energy(arc.reversed(), 0, eps_schedule);
    r.root_index = root_index;
    return r;
  }
  LoopEnergyReport report;
  report.root_index = root_index;
  report.eps_schedule = eps_schedule;
  const auto& pts = arc.points();
  for (double eps : eps_schedule) {
    const long long m = std::min(eps_to_samples(eps, arc.size()), n - 1 - root_index - 1);
    if (m < 1) throw RefinementError("arc too short after the root for the eps schedule");
    const long long e = root_index + m;
    std::vector<Complex> removed(pts.begin() + root_index, pts.begin() + e + 1);
    const auto at = [&](long long i) { return pts[static_cast<std::size_t>(i)]; };
    // both new chords start at an end of the removed piece; resolve their first segments
    std::vector<Complex> passengers = geometric_approach(at(e), at(e + 1), kEndRefinementLevels);
    passengers.insert(passengers.end(), pts.begin() + e + 1, pts.end());
    const std::size_t n_first = passengers.size();
    if (root_index > 0) {
      const std::vector<Complex> approach = geometric_approach(at(root_index), at(root_index - 1), kEndRefinementLevels);
      passengers.insert(passengers.end(), approach.begin(), approach.end());
    }
    for (long long i = root_index - 1; i >= 0; --i) passengers.push_back(at(i));
    const Uniformization u = uniformize_arc(removed, passengers);
    // u.chord = [0, images of the first chord..., images of the piece before the root...]
    const auto& img = u.chord.points();
    std::vector<Complex> first(img.begin(), img.begin() + static_cast<long long>(n_first) + 1);
    std::vector<Complex> rest(img.begin() + static_cast<long long>(n_first) + 1, img.end());
    double energy = 0.0;
    if (first.size() >= kMinSamples) {
      energy = two_slit_energy(CurveSamples::arc(std::move(first)), rest);
    } else if (!rest.empty()) {
      throw RefinementError("too few samples after the removed piece");
    }
    report.eps_samples.push_back(m);
    report.partial_energies.push_back(energy);
  }
  return finish_report(std::move(report));
}

std::vector<Complex> geodesic_continuation(const CurveSamples& chord, double t_max, std::size_t count) {
  const DrivingExtraction ex = compute_driving(chord, false);
  const double T = ex.driving.total_capacity();
  if (!(t_max > T)) throw InputError("t_max must exceed the capacity of the chord");
  const double base = chord[0].real();
  const double y_max = 2.0 * std::sqrt(t_max - T);
  const auto& ts = ex.driving.t();
  const double y_min = std::min(2.0 * std::sqrt(ts[ts.size() - 1] - ts[ts.size() - 2]), 0.5 * y_max);
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double lambda = count == 1 ? 1.0 : static_cast<double>(j) / static_cast<double>(count - 1);
    const double y = y_min * std::pow(y_max / y_min, lambda);
    out.push_back(base + ex.capacity.steps.inverse(ComplexPoint(0.0, y)).value());
  }
  return out;
}

double reversibility_gap(const CurveSamples& chord, double t_max, double floor) {
  const double forward = dirichlet_energy(compute_driving(chord, false).driving);
  const std::vector<Complex> tail = geodesic_continuation(chord, t_max, chord.size());
  const double base = chord[0].real();
  std::vector<Complex> rev{Complex{0.0, 0.0}};
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) rev.push_back(-1.0 / (*it - base));
  for (std::size_t i = chord.size() - 1; i >= 1; --i) rev.push_back(-1.0 / (chord[i] - base));
  const double backward = dirichlet_energy(compute_driving(CurveSamples::arc(std::move(rev)), false).driving);
  return std::abs(forward - backward) / std::max(forward, floor);
}

AdditivityGap additivity_gap(const DrivingFunction& W, double split) {
  if (!(split > W.start() && split < W.total_capacity())) throw InputError("split must lie inside the interval");
  AdditivityGap out;
  out.interpolated = !std::binary_search(W.t().begin(), W.t().end(), split);
  const double whole = dirichlet_energy(W);
  const double head = dirichlet_energy(W.restricted(W.start(), split));
  const double tail = dirichlet_energy(W.restricted(split, W.total_capacity()));
  out.gap = std::abs(whole - head - tail);
  return out;
}

}  // namespace loewner
