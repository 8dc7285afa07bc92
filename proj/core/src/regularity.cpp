#include "loewner/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "loewner/error.hpp"

namespace loewner {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kLsGrid = 600;

double min_spacing(const std::vector<double>& x) {
  double h = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < x.size(); ++i) h = std::min(h, x[i] - x[i - 1]);
  return h;
}

// sliding-window oscillation; 0 when no two grid points are within delta
double oscillation(const std::vector<double>& x, const std::vector<double>& f, double delta) {
  std::deque<std::size_t> hi, lo;
  double best = 0.0;
  std::size_t left = 0;
  for (std::size_t right = 0; right < x.size(); ++right) {
    while (!hi.empty() && f[hi.back()] <= f[right]) hi.pop_back();
    hi.push_back(right);
    while (!lo.empty() && f[lo.back()] >= f[right]) lo.pop_back();
    lo.push_back(right);
    while (x[right] - x[left] > delta) {
      ++left;
      if (hi.front() < left) hi.pop_front();
      if (lo.front() < left) lo.pop_front();
    }
    best = std::max(best, f[hi.front()] - f[lo.front()]);
  }
  return best;
}

struct LineFit {
  double slope = 0.0, intercept = 0.0, rms = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit fit;
  const double den = n * sxx - sx * sx;
  fit.slope = den != 0.0 ? (n * sxy - sx * sy) / den : 0.0;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

std::vector<double> uniform_resample(const DrivingFunction& f, std::size_t cells, std::vector<double>& grid) {
  const double a = f.start();
  const double b = f.total_capacity();
  grid.resize(cells + 1);
  std::vector<double> out(cells + 1);
  for (std::size_t k = 0; k <= cells; ++k) {
    grid[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(cells);
    out[k] = f(grid[k]);
  }
  return out;
}

// slope at 0 of the best fit c0 + c1 t + c2 t^(1+g) to W, g scanned on a grid
double initial_slope(const std::vector<double>& t, const std::vector<double>& w) {
  double best_rms = std::numeric_limits<double>::infinity();
  double best_slope = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double g = 0.01 * k;
    // normal equations for the three basis functions
    double m[3][3] = {}, r[3] = {};
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double phi[3] = {1.0, t[i], std::pow(t[i], 1.0 + g)};
      for (int p = 0; p < 3; ++p) {
        r[p] += phi[p] * w[i];
        for (int q = 0; q < 3; ++q) m[p][q] += phi[p] * phi[q];
      }
    }
    auto det = [](const double x[3][3]) {
      return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
             x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
    };
    const double d = det(m);
    if (!(std::abs(d) > 0.0)) continue;
    double c[3];
    for (int col = 0; col < 3; ++col) {
      double mc[3][3];
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) mc[p][q] = q == col ? r[p] : m[p][q];
      c[col] = det(mc) / d;
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double e = c[0] + c[1] * t[i] + c[2] * std::pow(t[i], 1.0 + g) - w[i];
      rss += e * e;
    }
    if (rss < best_rms) {
      best_rms = rss;
      best_slope = c[1];
    }
  }
  return best_slope;
}

}  // namespace

std::vector<double> modulus_of_continuity(const std::vector<double>& x, const std::vector<double>& f,
                                          const std::vector<double>& deltas) {
  if (x.size() != f.size() || x.size() < 2) throw InputError("modulus_of_continuity: mismatched or short samples");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw InputError("modulus_of_continuity: grid must be increasing");
  }
  const double h = min_spacing(x);
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    if (d < h * (1.0 - 1e-12)) throw RefinementError("delta below the grid resolution");
    out.push_back(oscillation(x, f, d));
  }
  return out;
}

std::vector<double> dyadic_scales(double span, double finest) {
  std::vector<double> out;
  for (int j = 1; j < 200; ++j) {
    const double d = std::ldexp(span, -j);
    if (d < finest) break;
    out.push_back(d);
  }
  return out;
}

HolderFit holder_fit(const std::vector<double>& deltas, const std::vector<double>& omegas) {
  if (deltas.size() != omegas.size()) throw InputError("holder_fit: mismatched inputs");
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < deltas.size(); ++i) pts.emplace_back(deltas[i], omegas[i]);
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 8) throw InputError("holder_fit needs at least 8 scales");
  if (pts.back().first < 100.0 * pts.front().first) throw InputError("holder_fit scales must span two decades");
  if (pts.size() >= 11) {
    pts.erase(pts.begin(), pts.begin() + 2);
    pts.pop_back();
  }
  double wmin = std::numeric_limits<double>::infinity(), wmax = 0.0;
  for (const auto& p : pts) {
    if (!(p.second > 0.0)) throw DomainError("holder_fit: modulus vanishes on a fitted scale");
    wmin = std::min(wmin, p.second);
    wmax = std::max(wmax, p.second);
  }
  if (wmax - wmin <= 1e-12 * wmax) throw DomainError("holder_fit: constant modulus, exponent undefined");

  std::vector<double> x, y;
  for (const auto& p : pts) {
    x.push_back(std::log(p.first));
    y.push_back(std::log(p.second));
  }
  const LineFit plain = least_squares(x, y);
  HolderFit fit;
  fit.delta_min = pts.front().first;
  fit.delta_max = pts.back().first;
  fit.exponent = plain.slope;
  fit.constant = std::exp(plain.intercept);
  fit.residual = plain.rms;

  if (pts.back().first < 1.0) {
    std::vector<double> ylog(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) ylog[i] = y[i] - std::log(std::log(1.0 / pts[i].first));
    const LineFit corrected = least_squares(x, ylog);
    if (corrected.rms < 0.75 * plain.rms) {
      fit.log_correction = true;
      fit.exponent = corrected.slope;
      fit.constant = std::exp(corrected.intercept);
      fit.residual = corrected.rms;
    }
  }
  fit.exponent = std::clamp(fit.exponent, 0.0, 2.0);
  return fit;
}

RegularityReport verify_regularity_shift(const CurveSamples& curve, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw InputError("beta must lie in (0, 1]");
  const CurveSamples eta = attach_and_lift(curve);
  const DrivingExtraction ex = compute_driving(eta, false);
  RegularityReport report;
  report.beta = beta;
  report.driving = ex.driving;
  const auto& t = ex.driving.t();
  const auto& w = ex.driving.w();
  const std::size_t cells = t.size() - 1;

  std::vector<double> d(cells), mid(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    d[i] = (w[i + 1] - w[i]) / (t[i + 1] - t[i]);
    mid[i] = 0.5 * (t[i] + t[i + 1]);
    report.wdot_max = std::max(report.wdot_max, std::abs(d[i]));
  }
  report.wdot_start = d.front();
  {
    std::vector<double> ts, ws;
    for (std::size_t i = 0; i <= cells && (t[i] <= t.back() / 4.0 || ts.size() < 8); ++i) {
      ts.push_back(t[i]);
      ws.push_back(w[i]);
    }
    report.wdot_zero = initial_slope(ts, ws);
  }

  std::vector<double> grid, values;
  if (beta <= 0.5) {
    report.branch = "W";
    report.predicted_exponent = beta + 0.5;
    values = uniform_resample(ex.driving, cells, grid);
  } else {
    report.branch = "Wdot";
    report.predicted_exponent = beta - 0.5;
    // the difference quotients live on cell midpoints; t = 0 carries the extrapolated value
    std::vector<double> tm{0.0}, dm{report.wdot_zero};
    tm.insert(tm.end(), mid.begin(), mid.end());
    dm.insert(dm.end(), d.begin(), d.end());
    values = uniform_resample(DrivingFunction(tm, dm), cells, grid);
  }
  const double span = grid.back() - grid.front();
  const std::vector<double> deltas = dyadic_scales(span, 2.0 * span / static_cast<double>(cells));
  report.deltas = deltas;
  report.omegas = modulus_of_continuity(grid, values, deltas);
  report.fit = holder_fit(report.deltas, report.omegas);
  return report;
}

VerticalBound vertical_bound_check(const CurveSamples& curve, std::size_t skip) {
  const CurveSamples eta = attach_and_lift(curve);
  const DrivingExtraction ex = compute_driving(eta, false);
  const auto& t = ex.driving.t();
  const auto& w = ex.driving.w();
  const auto& s = curve.arclength();

  // unwrapped tangent angle per segment, placed at the segment midpoint
  std::vector<double> sm, theta;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const double a = std::arg(curve[i] - curve[i - 1]);
    double v = a;
    if (!theta.empty()) {
      while (v - theta.back() > kPi) v -= 2.0 * kPi;
      while (v - theta.back() < -kPi) v += 2.0 * kPi;
    }
    sm.push_back(0.5 * (s[i] + s[i - 1]));
    theta.push_back(v);
  }
  const double h = min_spacing(sm);

  VerticalBound out;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double delta = 5.0 * t[i];
    const double omega_theta = delta < h ? 0.0 : oscillation(sm, theta, delta);
    const double omega = 2.0 * std::sin(0.5 * std::min(omega_theta, kPi));
    if (i < skip || omega <= 0.0) {
      ++out.excluded_samples;
      out.excluded_t_max = std::max(out.excluded_t_max, t[i]);
      continue;
    }
    out.constant = std::max(out.constant, std::abs(w[i]) / (omega * std::sqrt(t[i])));
  }
  return out;
}

static LsEstimate ls_single(const CurveSamples& curve, std::size_t index) {
  const CurveSamples eta = attach_and_lift(curve);
  const DrivingExtraction whole = compute_driving(eta, false);
  const DrivingExtraction ex = compute_driving(eta.sub_arc(0, static_cast<long long>(index)), false);
  const Complex gs = curve[index];

  std::vector<TiltedSlit> slits;
  for (const auto& step : ex.capacity.steps.steps()) slits.push_back(step.slit);

  // Boundary correspondence from the unzipping maps, tangent from the sampled curve:
  // f^{-1}(r)^2 is projected onto gamma[0, s] (or lands on R+), and v(r) is the argument of
  // the boundary tangent of H_s there, d/dsigma sqrt(gamma(sigma) - gamma(s)) = gamma'/(2 sqrt).
  const auto& pts = curve.points();
  std::vector<double> seg_angle(index);
  for (std::size_t k = 0; k < index; ++k) {
    double a = std::arg(pts[k + 1] - pts[k]);
    if (k > 0) {
      while (a - seg_angle[k - 1] > kPi) a -= 2.0 * kPi;
      while (a - seg_angle[k - 1] < -kPi) a += 2.0 * kPi;
    }
    seg_angle[k] = a;
  }
  auto tangent_at = [&](std::size_t k, double lambda) {
    // angle interpolated between segment midpoints
    double a = seg_angle[k];
    if (lambda < 0.5 && k > 0) a += (0.5 - lambda) * (seg_angle[k - 1] - seg_angle[k]);
    if (lambda > 0.5 && k + 1 < index) a += (lambda - 0.5) * (seg_angle[k + 1] - seg_angle[k]);
    return std::polar(1.0, a);
  };
  struct BoundaryPoint {
    Complex zeta;     // sqrt(point - gamma(s)), principal
    Complex tangent;  // d(point)/d(parameter)
  };
  auto boundary_point = [&](double r) {
    Complex z{r, 0.0};
    for (std::size_t j = slits.size(); j-- > 0;) z = slits[j].grow(z + slits[j].driving_end());
    const Complex Z = z * z;
    const double scale = std::abs(Z) + std::abs(gs);
    if (std::abs(z.imag()) <= 1e-12 * std::sqrt(scale)) return BoundaryPoint{std::sqrt(Z - gs), 1.0};
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    double best_lambda = 0.0;
    for (std::size_t k = 0; k < index; ++k) {
      const Complex a = pts[k], b = pts[k + 1];
      const double lambda = std::clamp(std::real((Z - a) * std::conj(b - a)) / std::norm(b - a), 0.0, 1.0);
      const double dist = std::abs(a + lambda * (b - a) - Z);
      if (dist < best) {
        best = dist;
        best_k = k;
        best_lambda = lambda;
      }
    }
    const Complex on_curve = pts[best_k] + best_lambda * (pts[best_k + 1] - pts[best_k]);
    return BoundaryPoint{std::sqrt(on_curve - gs), tangent_at(best_k, best_lambda)};
  };

  const double S = ex.driving.total_capacity();
  const double r_max = 10.0 * std::sqrt(S);
  const double r_min = 1e-4 * std::sqrt(S);
  std::vector<double> radii(kLsGrid);
  for (std::size_t j = 0; j < kLsGrid; ++j) {
    radii[j] = r_min * std::pow(r_max / r_min, static_cast<double>(j) / static_cast<double>(kLsGrid - 1));
  }

  // sweep each half-line inward from r_max, keeping the branch of sqrt and of arg continuous
  auto sweep = [&](double side) {
    std::vector<double> v(kLsGrid);
    Complex prev_zeta{};
    double prev_v = 0.0;
    for (std::size_t jj = kLsGrid; jj-- > 0;) {
      const BoundaryPoint bp = boundary_point(side * radii[jj]);
      Complex zeta = bp.zeta;
      if (jj + 1 == kLsGrid) {
        if (zeta.real() * side < 0.0) zeta = -zeta;
      } else if (std::abs(zeta - prev_zeta) > std::abs(-zeta - prev_zeta)) {
        zeta = -zeta;
      }
      // the boundary orientation is fixed up to sign; pick the one continuous with v
      double a = std::arg(bp.tangent / zeta);
      const double ref = jj + 1 == kLsGrid ? 0.0 : prev_v;
      while (a - ref > 0.5 * kPi) a -= kPi;
      while (a - ref < -0.5 * kPi) a += kPi;
      v[jj] = a;
      prev_zeta = zeta;
      prev_v = a;
    }
    return v;
  };
  const std::vector<double> vp = sweep(1.0);
  const std::vector<double> vm = sweep(-1.0);
  // phi_s'(0)^2 is a positive multiple of -gamma'(s)
  double v0 = 0.5 * std::arg(-tangent_at(index - 1, 1.0));
  while (v0 - vp[0] > 0.5 * kPi) v0 -= kPi;
  while (v0 - vp[0] < -0.5 * kPi) v0 += kPi;

  // int (v(r) + v(-r) - 2 v0) / r^2 dr with r = e^x
  double integral = 0.0;
  for (std::size_t j = 1; j < kLsGrid; ++j) {
    const double g0 = (vp[j - 1] + vm[j - 1] - 2.0 * v0) / radii[j - 1];
    const double g1 = (vp[j] + vm[j] - 2.0 * v0) / radii[j];
    integral += 0.5 * (g0 + g1) * std::log(radii[j] / radii[j - 1]);
  }
  const double tail = (vp.back() + vm.back() - 2.0 * v0) / r_max;

  LsEstimate out;
  out.s = curve.arclength()[index];
  out.L = (integral + tail) / kPi;
  out.integrand_tail = std::abs(tail) / kPi;
  const auto& t = whole.driving.t();
  const auto& w = whole.driving.w();
  out.t = t[index];
  out.wdot = (w[index + 1] - w[index - 1]) / (t[index + 1] - t[index - 1]);
  if (out.integrand_tail > kMaxLsTail * std::max(std::abs(out.L), 1.0 / r_max)) {
    throw NonConvergenceError("L_s truncation tail too large", {out.L, out.integrand_tail});
  }
  return out;
}


LsEstimate estimate_Ls(const CurveSamples& curve, std::size_t index) {
  if (index < 2 * kMinSamples || index + 1 >= curve.size()) throw InputError("estimate_Ls: index must be interior");
  // the discretization error decays like sqrt(h); combine with every other sample
  std::vector<Complex> coarse;
  std::size_t coarse_index = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i == index) coarse_index = coarse.size();
    if (i == 0 || i % 2 == index % 2) coarse.push_back(curve[i]);
  }
  LsEstimate fine = ls_single(curve, index);
  const LsEstimate rough = ls_single(CurveSamples::arc(std::move(coarse)), coarse_index);
  fine.L = (std::numbers::sqrt2 * fine.L - rough.L) / (std::numbers::sqrt2 - 1.0);
  fine.integrand_tail = std::max(fine.integrand_tail, rough.integrand_tail);
  return fine;
}

}  // namespace loewner
