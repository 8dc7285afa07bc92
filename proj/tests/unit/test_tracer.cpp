#include <cmath>
#include <numbers>

#include "doctest.h"
#include "loewner/error.hpp"
#include "loewner/tracer.hpp"
#include "oracles.hpp"

using namespace loewner;

TEST_CASE("zero driving function traces the vertical segment") {
  const CurveTrace tr = trace_curve(DrivingFunction::sample([](double) { return 0.0; }, 2.0, 16), 256);
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    CHECK(std::abs(tr.points[i] - Complex(0.0, 2.0 * std::sqrt(tr.t_of_point[i]))) < 1e-12);
  }
}

TEST_CASE("k sqrt(t) traces the ray B(k) sqrt(t)") {
  for (double k : {0.5, 2.0, -1.3}) {
    const auto W = DrivingFunction::sample([k](double t) { return k * std::sqrt(t); }, 1.0, 256);
    const CurveTrace tr = trace_curve(W, 2048);
    const Complex B = k >= 0 ? B_of_k(k) : -std::conj(B_of_k(-k));
    CHECK(std::abs(tr.points.points().back() - B) < 5e-3);
    // away from the first cells, where W is linearly interpolated, points sit on the ray
    for (std::size_t i = 16; i < tr.points.size(); i += 16) {
      CHECK(std::abs(std::arg(tr.points[i]) - std::arg(B)) < 5e-3);
    }
  }
}

TEST_CASE("ray oracle itself reproduces B(k)") {
  const double k = 1.7;
  const Complex tip = oracle::backward_tip([k](double t) { return k * std::sqrt(t); }, 1.0);
  CHECK(std::abs(tip - B_of_k(k)) < 1e-7);
}

TEST_CASE("tip of a linear driving function matches the reverse-flow oracle, first order in the step") {
  auto W = [](double t) { return 0.3 * t; };
  const Complex ref = oracle::backward_tip(W, 1.0);
  const auto d = DrivingFunction::sample(W, 1.0, 64);
  const double e1 = std::abs(trace_curve(d, 256).points.points().back() - ref);
  const double e2 = std::abs(trace_curve(d, 512).points.points().back() - ref);
  const double e3 = std::abs(trace_curve(d, 4096).points.points().back() - ref);
  CHECK(e3 < 5e-5);
  CHECK(e1 / e2 >= 1.5);
}

TEST_CASE("Brownian scaling and translation covariance") {
  auto base = [](double t) { return std::sin(3.0 * t) - 0.5 * t; };
  const double lambda = 1.7, c = 0.8;
  const CurveTrace a = trace_curve(DrivingFunction::sample(base, 1.0, 64), 1024);
  const CurveTrace b = trace_curve(
      DrivingFunction::sample([&](double t) { return lambda * base(t / (lambda * lambda)) + c; }, lambda * lambda, 64),
      1024);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(std::abs(b.points[i] - (lambda * a.points[i] + c)) < 2e-3);
  }
}

TEST_CASE("substep capacities add up and cells are respected") {
  const auto W = DrivingFunction::sample([](double t) { return std::cos(5.0 * t); }, 0.8, 10);
  std::vector<std::size_t> cell_end;
  const auto slits = loewner_substeps(W, 100, 0.8, cell_end);
  double total = 0.0;
  for (const auto& s : slits) total += s.dt();
  CHECK(total == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(cell_end.size() == 10);
  CHECK(cell_end.back() + 1 == slits.size());
  CHECK_THROWS_AS(loewner_substeps(W, 1, 0.8), InputError);
}

TEST_CASE("evolve_point agrees with a direct ODE solve") {
  auto W = [](double t) { return 0.3 * t + 0.2 * std::sin(4.0 * t); };
  const auto d = DrivingFunction::sample(W, 1.0, 512);
  for (Complex z : {Complex(1.0, 1.0), Complex(-2.0, 0.3), Complex(0.1, 3.0)}) {
    const Complex ref = oracle::forward_flow(W, z, 1.0);
    CHECK(std::abs(evolve_point(d, z, 1.0) - ref) < 1e-4);
  }
}

TEST_CASE("points on the trace are swallowed at their capacity time") {
  const auto W = DrivingFunction::sample([](double) { return 0.0; }, 1.0, 8);
  try {
    evolve_point(W, Complex(0.0, 1.0), 1.0);
    FAIL("expected the point to be swallowed");
  } catch (const SwallowedError& e) {
    CHECK(e.survival_time() == doctest::Approx(0.25).epsilon(0.02));
  }
}

TEST_CASE("malformed driving data is rejected") {
  CHECK_THROWS_AS(DrivingFunction({0.0, 0.0, 1.0}, {0.0, 1.0, 2.0}), InputError);
  CHECK_THROWS_AS(DrivingFunction({0.0}, {0.0}), InputError);
  CHECK_THROWS_AS(DrivingFunction({0.0, 1.0}, {0.0, std::nan("")}), InputError);
}
