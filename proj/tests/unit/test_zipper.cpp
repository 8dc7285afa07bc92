#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "loewner/catalog.hpp"
#include "loewner/error.hpp"
#include "loewner/maps.hpp"
#include "loewner/tracer.hpp"
#include "loewner/zipper.hpp"

using namespace loewner;

namespace {

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

}  // namespace

TEST_CASE("vertical segment unzips to W = 0 and T = y^2/4") {
  for (double y : {0.5, 1.0, 3.0}) {
    const DrivingExtraction ex = compute_driving(catalog::vertical_slit(y, 64));
    for (double w : ex.driving.w()) CHECK(std::abs(w) < 1e-6);
    CHECK(ex.driving.total_capacity() == doctest::Approx(y * y / 4).epsilon(5e-3));
    CHECK(ex.capacity.t.front() == 0.0);
  }
}

TEST_CASE("tilted ray unzips to k(theta) sqrt(t)") {
  for (double theta : {std::numbers::pi / 8, -0.4, 1.0}) {
    const DrivingExtraction ex = compute_driving(catalog::ray(theta, 1.0, 256));
    const double k = k_of_theta_signed(theta);
    const auto& t = ex.driving.t();
    const auto& w = ex.driving.w();
    for (std::size_t i = 1; i < t.size(); ++i) {
      CHECK(w[i] / std::sqrt(t[i]) == doctest::Approx(k).epsilon(0.02));
    }
  }
}

TEST_CASE("capacity grid is strictly increasing and matches the point count") {
  const CurveSamples c = catalog::circular_arc(Complex(0.0, 0.0), 1.0, 0.0, 2.5, 100);
  const CurveSamples lifted = CurveSamples::arc([&] {
    std::vector<Complex> p;
    for (Complex z : c.points()) p.push_back(z - 1.0);  // start on the axis at 0
    return p;
  }());
  const DrivingExtraction ex = compute_driving(lifted);
  REQUIRE(ex.capacity.t.size() == lifted.size());
  REQUIRE(ex.capacity.s.size() == lifted.size());
  for (std::size_t i = 1; i < ex.capacity.t.size(); ++i) {
    CHECK(ex.capacity.t[i] > ex.capacity.t[i - 1]);
    CHECK(ex.capacity.s[i] > ex.capacity.s[i - 1]);
  }
}

TEST_CASE("W(0) is the abscissa of the starting point") {
  std::vector<Complex> p;
  for (int i = 0; i < 32; ++i) p.emplace_back(0.7 + 0.01 * i, 0.05 * i);
  const DrivingExtraction ex = compute_driving(CurveSamples::arc(p));
  CHECK(ex.driving.w().front() == doctest::Approx(0.7));
}

TEST_CASE("compute_driving inverts trace_curve") {
  const auto W = DrivingFunction::sample([](double t) { return 0.3 * t; }, 1.0, 1024);
  const CurveTrace tr = trace_curve(W, 1024);
  const DrivingExtraction ex = compute_driving(tr.points);
  double worst = 0.0;
  for (std::size_t i = 0; i < ex.driving.size(); ++i) {
    worst = std::max(worst, std::abs(ex.driving.w()[i] - 0.3 * ex.driving.t()[i]));
  }
  CHECK(worst <= 1e-2);
  CHECK(ex.driving.total_capacity() == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("round trip error shrinks on a step ladder") {
  auto err = [](std::size_t n) {
    const auto W = DrivingFunction::sample([](double t) { return std::sin(3 * t); }, 1.0, n);
    const DrivingExtraction ex = compute_driving(trace_curve(W, static_cast<int>(4 * n)).points);
    double worst = 0.0;
    for (std::size_t i = 0; i < ex.driving.size(); ++i) {
      worst = std::max(worst, std::abs(ex.driving.w()[i] - std::sin(3 * ex.driving.t()[i])));
    }
    return worst;
  };
  const double e1 = err(64), e2 = err(256);
  CHECK(e2 < e1);
  CHECK(e2 < 1e-2);
}

TEST_CASE("trace_curve reproduces an unzipped curve within 10 h") {
  const std::vector<CurveSamples> curves{
      catalog::ray(0.3, 1.0, 128), catalog::vertical_slit(1.0, 64),
      attach_and_lift(catalog::tangential_circle_arc(1.0, 1.0, 128)),
      attach_and_lift(catalog::c1beta(0.75, 0.5, 1.0, 128))};
  for (const CurveSamples& c : curves) {
    const DrivingExtraction ex = compute_driving(c);
    const CurveTrace tr = trace_curve(ex.driving, 4096);
    CHECK(hausdorff(tr.points, c) <= 10 * c.max_spacing());
  }
}

TEST_CASE("capacity additivity: unzipping a tail continues the capacity") {
  const CurveSamples c = attach_and_lift(catalog::tangential_circle_arc(1.0, 1.5, 96));
  const DrivingExtraction whole = compute_driving(c);
  const std::size_t m = 40;
  const DrivingExtraction head = compute_driving(c.sub_arc(0, static_cast<long long>(m)));
  CHECK(head.driving.total_capacity() == doctest::Approx(whole.capacity.t[m]).epsilon(1e-9));
  // map the tail out by the head's unzipping maps; the image starts on R
  std::vector<Complex> tail(c.points().begin() + static_cast<long>(m), c.points().end());
  std::vector<Complex> mapped = tail;
  std::vector<Complex> head_pts(c.points().begin(), c.points().begin() + static_cast<long>(m) + 1);
  unzip(head_pts, mapped);
  CHECK(std::abs(mapped.front().imag()) < 1e-6);
  for (std::size_t i = 1; i < mapped.size(); ++i) CHECK(mapped[i].imag() > 0.0);
  const DrivingExtraction rest = compute_driving(CurveSamples::arc(mapped), false);
  CHECK(head.driving.total_capacity() + rest.driving.total_capacity() ==
        doctest::Approx(whole.driving.total_capacity()).epsilon(2e-3));
  // tail of W equals the driving function of the mapped-out remainder, shifted
  for (std::size_t i = 0; i < rest.driving.size(); i += 8) {
    const double t = head.driving.total_capacity() + rest.driving.t()[i];
    CHECK(rest.driving.w()[i] + (head.driving.w().back() - rest.driving.w().front()) ==
          doctest::Approx(whole.driving(t)).epsilon(2e-2));
  }
}

TEST_CASE("lifted tangential curves obey s/5 <= t(s) <= s/2") {
  const std::vector<CurveSamples> curves{
      catalog::straight_continuation(1.0, 64), catalog::tangential_circle_arc(1.0, 1.0, 128),
      catalog::tangential_circle_arc(0.5, 1.0, 128), catalog::c1beta(0.25, 0.5, 1.0, 128),
      catalog::c1beta(0.75, 0.5, 1.0, 256)};
  for (const CurveSamples& g : curves) {
    const DrivingExtraction ex = compute_driving(attach_and_lift(g));
    const auto& s = g.arclength();
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(ex.capacity.t[i] >= s[i] / 5 - 1e-12);
      CHECK(ex.capacity.t[i] <= s[i] / 2 + 1e-12);
    }
  }
}

TEST_CASE("straight continuation lifts to i sqrt(s) with W = 0") {
  const CurveSamples eta = attach_and_lift(catalog::straight_continuation(2.0, 50));
  for (std::size_t i = 0; i < eta.size(); ++i) {
    CHECK(std::abs(eta[i].real()) < 1e-12);
  }
  const DrivingExtraction ex = compute_driving(eta);
  for (double w : ex.driving.w()) CHECK(std::abs(w) < 1e-9);
  CHECK(ex.driving.total_capacity() == doctest::Approx(0.5).epsilon(5e-3));
}

TEST_CASE("attach_and_lift rejects curves touching the positive axis") {
  std::vector<Complex> p{0.0, Complex(-0.5, 0.1), Complex(-0.2, 0.8), Complex(0.4, 0.5), Complex(0.8, 0.0),
                         Complex(1.0, -0.2), Complex(0.6, -0.5), Complex(0.3, -0.6)};
  CHECK_THROWS_AS(attach_and_lift(CurveSamples::arc(p)), Error);
}

TEST_CASE("compute_driving rejects bad curves") {
  // self-intersecting
  std::vector<Complex> bow{0.0, Complex(0, 1), Complex(1, 2), Complex(2, 2), Complex(2, 1),
                           Complex(1, 1), Complex(-0.5, 1.5), Complex(-1, 2), Complex(-1, 3)};
  CHECK_THROWS_AS(compute_driving(CurveSamples::arc(bow)), GeometryError);
  // leaves H
  std::vector<Complex> dip;
  for (int i = 0; i < 10; ++i) dip.emplace_back(0.1 * i, i == 5 ? -0.1 : 0.2 + 0.1 * i);
  CHECK_THROWS_AS(compute_driving(CurveSamples::arc(dip)), Error);
  // too short
  CHECK_THROWS_AS(compute_driving(catalog::vertical_slit(1.0, 4)), Error);
}

TEST_CASE("check_simple flags the offending segment") {
  std::vector<Complex> bow{0.0, Complex(0, 1), Complex(1, 2), Complex(2, 2), Complex(2, 1), Complex(-1, 1.5)};
  try {
    CurveSamples::arc(bow).check_simple();
    FAIL("expected a geometry error");
  } catch (const GeometryError& e) {
    CHECK(e.index() <= 5);
  }
  CHECK_NOTHROW(catalog::circle(64).check_simple());
  CHECK_NOTHROW(catalog::ellipse(2.0, 1.0, 64).check_simple());
}

TEST_CASE("uniformize_slit_complement: composition round trip and circle chord") {
  const CurveSamples loop = catalog::circle(256);
  const Uniformization u = uniformize_slit_complement(loop, 0, 4);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  int tested = 0;
  while (tested < 50) {
    const Complex z(d(rng), d(rng));
    if (std::abs(std::abs(z) - 1.0) < 0.05) continue;
    const ComplexPoint w = u.map.forward(z);
    CHECK(u.map.inverse(w).near(z, 1e-6 * std::max(1.0, std::abs(z))));
    ++tested;
  }
  // the rest of a circle is a geodesic: the chord is (close to) the imaginary axis
  for (std::size_t i = 1; i < u.chord.size(); ++i) {
    CHECK(std::abs(std::arg(u.chord[i]) - std::numbers::pi / 2) < 1e-2);
  }
  CHECK(std::abs(u.chord[0]) < 1e-9);
}

TEST_CASE("uniformize_slit_complement validates the eps index") {
  const CurveSamples loop = catalog::circle(64);
  CHECK_THROWS_AS(uniformize_slit_complement(loop, 0, 0), Error);
  CHECK_THROWS_AS(uniformize_slit_complement(loop, 0, 64), Error);
  CHECK_THROWS_AS(uniformize_slit_complement(catalog::vertical_slit(1.0, 64), 0, 4), Error);
}
