// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "loewner/catalog.hpp"
#include "loewner/energy.hpp"
#include "loewner/error.hpp"
#include "loewner/maps.hpp"
#include "loewner/minimizer.hpp"
#include "loewner/regularity.hpp"
#include "loewner/tracer.hpp"
#include "loewner/zipper.hpp"

using namespace loewner;

namespace {

constexpr double pi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [FAILED]");
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double hausdorff(const CurveSamples& a, const CurveSamples& b) {
  auto one_way = [](const CurveSamples& p, const CurveSamples& q) {
    double worst = 0.0;
    for (Complex z : p.points()) {
      double best = INFINITY;
      for (std::size_t j = 0; j + 1 < q.size(); ++j) {
        const Complex d = q[j + 1] - q[j];
        const double u = std::clamp(std::real((z - q[j]) * std::conj(d)) / std::norm(d), 0.0, 1.0);
        best = std::min(best, std::abs(z - q[j] - u * d));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

Verdict criterion1() {
  Verdict v;
  const double k = k_of_theta(pi / 4);
  v.require(std::abs(k - 4 / std::sqrt(3.0)) <= 1e-12, fmt("|k(pi/4) - 4/sqrt3| = %.1e", std::abs(k - 4 / std::sqrt(3.0))));
  double smallest = INFINITY;
  for (int i = 0; i < 100; ++i) smallest = std::min(smallest, std::abs(B_of_k(0.2 * i)));
  v.require(smallest >= 2.0, fmt("min |B(k)| over k in [0, 19.8] = %.15g", smallest));
  const double err = std::abs(B_of_k(0.0) - Complex(0.0, 2.0));
  v.require(err <= 1e-12, fmt("|B(0) - 2i| = %.1e", err));
  return v;
}

Verdict criterion2() {
  Verdict v;
  const double k = k_of_theta(pi / 8);
  const DrivingExtraction ex = compute_driving(catalog::ray(pi / 8, 1.0, 256));
  double worst = 0.0;
  for (std::size_t i = 1; i < ex.driving.size(); ++i) {
    worst = std::max(worst, std::abs(ex.driving.w()[i] / std::sqrt(ex.driving.t()[i]) / k - 1));
  }
  v.require(worst <= 0.02, fmt("ray: max |W/sqrt(t) / k(pi/8) - 1| = %.2e", worst));
  const double y = 1.7;
  const double T = compute_driving(catalog::vertical_slit(y, 256)).driving.total_capacity();
  const double rel = std::abs(T / (y * y / 4) - 1);
  v.require(rel <= 0.005, fmt("vertical: |T / (y^2/4) - 1| = %.2e", rel));
  return v;
}

Verdict criterion3() {
  Verdict v;
  struct Named {
    const char* name;
    CurveSamples curve;
  };
  const std::vector<Named> curves{
      {"vertical", catalog::vertical_slit(1.0, 128)},
      {"ray", catalog::ray(pi / 8, 1.0, 128)},
      {"circle chord", catalog::circular_arc(Complex(1.0, 0.0), 1.0, pi, pi / 4, 128)},
      {"two-arc", catalog::two_arc_concatenation(128)},
      {"lifted tangential arc", attach_and_lift(catalog::tangential_circle_arc(1.0, 1.0, 128))},
      {"lifted c1beta", attach_and_lift(catalog::c1beta(0.75, 0.5, 1.0, 128))},
  };
  double worst_ratio = 0.0;
  std::string worst_name;
  for (const Named& c : curves) {
    const DrivingExtraction ex = compute_driving(c.curve);
    const CurveTrace tr = trace_curve(ex.driving, 4096);
    const double ratio = hausdorff(tr.points, c.curve) / c.curve.max_spacing();
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_name = c.name;
    }
  }
  v.require(worst_ratio <= 10.0, fmt("catalog: max Hausdorff / h = %.3f", worst_ratio) + " (" + worst_name + ")");
  const auto W = DrivingFunction::sample([](double t) { return 0.3 * t; }, 1.0, 1024);
  const DrivingExtraction ex = compute_driving(trace_curve(W, 1024).points);
  double sup = 0.0;
  for (std::size_t i = 0; i < ex.driving.size(); ++i) {
    sup = std::max(sup, std::abs(ex.driving.w()[i] - 0.3 * ex.driving.t()[i]));
  }
  v.require(sup <= 1e-2, fmt("W = 0.3t: sup error %.2e", sup));
  return v;
}

// Largest R on the sample grid with omega(R) <= 1/5, omega the modulus of continuity of the
// unit tangent in arclength: the range on which the capacity bounds are asserted.
double regular_range(const CurveSamples& g) {
  const auto& p = g.points();
  const auto& s = g.arclength();
  std::vector<Complex> tau;
  std::vector<double> mid;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    tau.push_back((p[i + 1] - p[i]) / std::abs(p[i + 1] - p[i]));
    mid.push_back(0.5 * (s[i] + s[i + 1]));
  }
  double R = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    double omega = 0.0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      for (std::size_t j = i + 1; j < tau.size() && mid[j] - mid[i] <= s[k]; ++j) {
        omega = std::max(omega, std::abs(tau[j] - tau[i]));
      }
    }
    if (omega > 0.2) break;
    R = s[k];
  }
  return R;
}

Verdict criterion4() {
  Verdict v;
  const std::vector<CurveSamples> curves{
      catalog::straight_continuation(1.0, 256), catalog::tangential_circle_arc(1.0, 1.0, 256),
      catalog::tangential_circle_arc(0.5, 1.5, 256), catalog::c1beta(0.25, 0.5, 1.0, 256),
      catalog::c1beta(0.75, 0.5, 1.0, 256), catalog::c1beta(0.5, 1.0, 1.0, 256)};
  std::size_t points = 0, violations = 0, beyond = 0, beyond_outside = 0;
  double lo = INFINITY, hi = 0.0;
  for (const CurveSamples& g : curves) {
    const double R = regular_range(g);
    const DrivingExtraction ex = compute_driving(attach_and_lift(g));
    for (std::size_t i = 1; i < g.size(); ++i) {
      const double r = ex.capacity.t[i] / g.arclength()[i];
      const bool outside = r < 0.2 || r > 0.5;
      if (g.arclength()[i] > R) {
        ++beyond;
        if (outside) ++beyond_outside;
        continue;
      }
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      ++points;
      if (outside) ++violations;
    }
  }
  v.require(points > 0 && violations == 0, std::to_string(violations) + " of " + std::to_string(points) +
                                               fmt(" points with s <= R outside; t/s in [%.4f, %.4f]", lo, hi));
  v.detail += "; past R (not asserted): " + std::to_string(beyond_outside) + " of " + std::to_string(beyond) +
              " outside";
  return v;
}

Verdict criterion5() {
  Verdict v;
  const double k = 1.3;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const std::size_t n = 4000;
    std::vector<double> t(n + 1), w(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      t[i] = eps * std::pow(1 / eps, static_cast<double>(i) / n);
      w[i] = k * std::sqrt(t[i]);
    }
    t.back() = 1.0;
    w.back() = k;
    const EnergyReport r = chordal_energy({t, w});
    const double exact = k * k / 8 * std::log(1 / eps);
    const double rel = std::abs(r.finite_value / exact - 1);
    v.require(rel <= 0.02 && r.diverged,
              fmt("eps=%.0e: rel err %.2e", eps, rel) + (r.diverged ? ", diverged" : ", detector silent"));
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  const LoopEnergyReport r = loop_energy(catalog::circle(512), 0);
  v.require(r.extrapolated <= 0.05, fmt("energy %.3e", r.extrapolated));
  bool monotone = true;
  for (std::size_t i = 1; i < r.partial_energies.size(); ++i) {
    const double slack = kMonotoneSlack * std::max(r.partial_energies[i - 1], kMonotoneFloor);
    if (r.partial_energies[i] < r.partial_energies[i - 1] - slack) monotone = false;
  }
  v.require(monotone, "partials monotone within 2%");
  return v;
}

Verdict criterion7() {
  Verdict v;
  const CurveSamples e = catalog::ellipse(2.0, 1.0, 512);
  std::vector<double> values;
  for (int j = 0; j < 8; ++j) values.push_back(loop_energy(e, 64 * j).extrapolated);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / 8;
  const double spread = (*hi - *lo) / mean;
  v.require(spread <= 0.05, fmt("energies in [%.5f, %.5f]", *lo, *hi) + fmt(", spread %.2e", spread));
  return v;
}

Verdict criterion8() {
  Verdict v;
  const double a = minimize_chord_through_point(pi / 3, 1.0).energy;
  const double target = -8 * std::log(std::sin(pi / 3));
  v.require(std::abs(a / target - 1) <= 0.05, fmt("phi=pi/3: %.5f vs %.5f", a, target));
  const double b = minimize_chord_through_point(pi / 2, 1.0).energy;
  v.require(b <= 0.01, fmt("phi=pi/2: %.2e", b));
  const double c = minimize_chord_through_point(pi / 2 + 0.1, 1.0).energy;
  v.require(c >= 0.04 / 1.5 && c <= 0.04 * 1.5, fmt("phi=pi/2+0.1: %.5f", c));
  return v;
}

Verdict criterion9() {
  Verdict v;
  auto nonincreasing = [](const std::vector<double>& h) {
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] > h[i - 1]) return false;
    }
    return true;
  };
  ConstraintSet rect;
  rect.points = {Complex(-1.0, -0.5), Complex(1.0, -0.5), Complex(1.0, 0.5), Complex(-1.0, 0.5)};
  const MinimizerResult r = minimize_loop(rect);
  v.require(r.stationarity <= 0.05, fmt("rectangle: max free-arc energy %.2e", r.stationarity));
  v.require(nonincreasing(r.energy_history), fmt("rectangle: history nonincreasing over %.0f sweeps",
                                                 static_cast<double>(r.energy_history.size())));
  ConstraintSet tri;
  tri.points = {Complex(1.0, 0.0), Complex(-0.5, 0.9), Complex(-0.6, -0.7)};
  const MinimizerResult t = minimize_loop(tri);
  v.require(t.energy <= 0.05, fmt("3 points: energy %.2e", t.energy));
  v.require(nonincreasing(t.energy_history), "3 points: history nonincreasing");
  return v;
}

Verdict criterion10() {
  Verdict v;
  const RegularityReport a = verify_regularity_shift(catalog::c1beta(0.25, 0.5, 1.0, 1025), 0.25);
  v.require(a.branch == "W" && std::abs(a.fit.exponent - 0.75) <= 0.1,
            fmt("beta=0.25: W exponent %.3f (target 0.75)", a.fit.exponent));
  const RegularityReport b = verify_regularity_shift(catalog::c1beta(0.75, 0.5, 1.0, 1025), 0.75);
  v.require(b.branch == "Wdot" && std::abs(b.fit.exponent - 0.25) <= 0.1,
            fmt("beta=0.75: Wdot exponent %.3f (target 0.25)", b.fit.exponent));
  v.require(std::abs(b.wdot_zero) <= 0.05 * b.wdot_max,
            fmt("|Wdot(0)| / max|Wdot| = %.3e", std::abs(b.wdot_zero) / b.wdot_max));
  return v;
}

Verdict criterion11() {
  Verdict v;
  const CurveSamples g = catalog::tangential_circle_arc(1.0, 1.0, 513);
  double worst = 0.0;
  for (std::size_t i : {64u, 160u, 256u, 352u, 448u}) {
    const LsEstimate e = estimate_Ls(g, i);
    worst = std::max(worst, std::abs(3 * e.L / e.wdot - 1));
  }
  v.require(worst <= 0.1, fmt("max |3 L_s / Wdot - 1| over 5 points = %.2e", worst));
  return v;
}

Verdict criterion12() {
  Verdict v;
  const double c1 = vertical_bound_check(catalog::c1beta(0.75, 0.5, 1.0, 513)).constant;
  const double c2 = vertical_bound_check(catalog::c1beta(0.75, 0.5, 1.0, 1025)).constant;
  const double change = std::abs(c2 / c1 - 1);
  v.require(std::isfinite(c1) && std::isfinite(c2), fmt("c = %.4f, %.4f", c1, c2));
  v.require(change <= 0.1, fmt("change under doubling %.2e", change));
  return v;
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                       criterion5, criterion6, criterion7,  criterion8,
                                                       criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failed;
    std::printf("criterion %zu: %s (%.1fs) %s\n", i + 1, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
