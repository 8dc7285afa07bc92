#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "loewner/catalog.hpp"
#include "loewner/error.hpp"
#include "loewner/regularity.hpp"

using namespace loewner;

namespace {

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  std::vector<double> x(n + 1);
  for (std::size_t i = 0; i <= n; ++i) x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
  return x;
}

// sup |f(x) - f(y)| over |x - y| <= d, brute force
double brute_modulus(const std::vector<double>& x, const std::vector<double>& f, double d) {
  double best = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size() && x[j] - x[i] <= d; ++j) best = std::max(best, std::abs(f[j] - f[i]));
  }
  return best;
}

}  // namespace

TEST_CASE("modulus of continuity agrees with brute force") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  const auto x = uniform_grid(0.0, 1.0, 300);
  std::vector<double> f{0.0};
  for (std::size_t i = 1; i < x.size(); ++i) f.push_back(f.back() + 0.05 * g(rng));
  const std::vector<double> deltas{0.004, 0.01, 0.05, 0.3, 1.0};
  const auto om = modulus_of_continuity(x, f, deltas);
  for (std::size_t k = 0; k < deltas.size(); ++k) CHECK(om[k] == doctest::Approx(brute_modulus(x, f, deltas[k])));
  for (std::size_t k = 1; k < om.size(); ++k) CHECK(om[k] >= om[k - 1]);
}

TEST_CASE("modulus of s and sqrt(s)") {
  const auto x = uniform_grid(0.0, 1.0, 1024);
  std::vector<double> lin, root;
  for (double s : x) {
    lin.push_back(s);
    root.push_back(std::sqrt(s));
  }
  for (double d : {1.0 / 512, 1.0 / 64, 0.25}) {
    const double dd = std::floor(d * 1024 + 1e-9) / 1024;
    CHECK(modulus_of_continuity(x, lin, {d})[0] == doctest::Approx(dd));
    CHECK(modulus_of_continuity(x, root, {d})[0] == doctest::Approx(std::sqrt(dd)));
  }
}

TEST_CASE("Holder fit recovers power laws") {
  for (double b : {0.25, 0.5, 0.75}) {
    const auto x = uniform_grid(0.0, 1.0, 4096);
    std::vector<double> f;
    for (double s : x) f.push_back(std::pow(s, b));
    const auto deltas = dyadic_scales(1.0, 4.0 / 4096);
    const HolderFit fit = holder_fit(deltas, modulus_of_continuity(x, f, deltas));
    CHECK(fit.exponent == doctest::Approx(b).epsilon(0.02 / b));
    CHECK_FALSE(fit.log_correction);
  }
}

TEST_CASE("Holder fit flags delta log(1/delta)") {
  std::vector<double> deltas, omegas;
  for (int j = 1; j <= 14; ++j) {
    const double d = std::ldexp(1.0, -j);
    deltas.push_back(d);
    omegas.push_back(d * std::log(1 / d));
  }
  const HolderFit fit = holder_fit(deltas, omegas);
  CHECK(fit.log_correction);
  CHECK(fit.exponent == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("dyadic scales halve down to the finest") {
  const auto d = dyadic_scales(2.0, 0.01);
  REQUIRE(!d.empty());
  CHECK(d.front() == doctest::Approx(1.0));
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] == doctest::Approx(d[i - 1] / 2));
  CHECK(d.back() >= 0.01);
  CHECK(d.back() / 2 < 0.01);
}

TEST_CASE("regularity errors") {
  const auto x = uniform_grid(0.0, 1.0, 10);
  const std::vector<double> f(x.size(), 1.0);
  CHECK_THROWS_AS(modulus_of_continuity(x, f, {0.01}), RefinementError);
  CHECK_THROWS_AS(holder_fit({0.2, 0.4}, {0.1, 0.2}), InputError);
  const auto fine = uniform_grid(0.0, 1.0, 1024);
  const std::vector<double> flat(fine.size(), 1.0);
  const auto deltas = dyadic_scales(1.0, 1.0 / 1024);
  std::vector<double> constant(deltas.size(), 0.3);
  CHECK_THROWS_AS(holder_fit(deltas, constant), DomainError);
  CHECK_THROWS_AS(holder_fit(deltas, modulus_of_continuity(fine, flat, deltas)), DomainError);
  CHECK_THROWS_AS(modulus_of_continuity({0.0, 0.5, 0.4}, {0.0, 1.0, 2.0}, {0.5}), InputError);
}

TEST_CASE("regularity shifts by one half") {
  SUBCASE("beta = 0.25 lifts to W in C^{0.75}") {
    const RegularityReport r = verify_regularity_shift(catalog::c1beta(0.25, 0.5, 1.0, 1025), 0.25);
    CHECK(r.branch == "W");
    CHECK(r.predicted_exponent == doctest::Approx(0.75));
    CHECK(std::abs(r.fit.exponent - 0.75) <= 0.1);
  }
  SUBCASE("beta = 0.75 lifts to Wdot in C^{0.25}") {
    const RegularityReport r = verify_regularity_shift(catalog::c1beta(0.75, 0.5, 1.0, 1025), 0.75);
    CHECK(r.branch == "Wdot");
    CHECK(r.predicted_exponent == doctest::Approx(0.25));
    CHECK(std::abs(r.fit.exponent - 0.25) <= 0.1);
    CHECK(std::abs(r.wdot_zero) <= 0.05 * r.wdot_max);
  }
  CHECK_THROWS_AS(verify_regularity_shift(catalog::c1beta(0.5, 0.5, 1.0, 129), 1.5), InputError);
}

TEST_CASE("straight continuation has zero driving function and L_s = 0") {
  const CurveSamples g = catalog::straight_continuation(1.0, 129);
  const LsEstimate e = estimate_Ls(g, 64);
  CHECK(std::abs(e.L) < 1e-6);
  CHECK(std::abs(e.wdot) < 1e-6);
}

TEST_CASE("3 L_s matches Wdot on the tangential circle arc") {
  const CurveSamples g = catalog::tangential_circle_arc(1.0, 1.0, 513);
  for (std::size_t i : {128u, 256u, 384u}) {
    const LsEstimate e = estimate_Ls(g, i);
    CHECK(3 * e.L == doctest::Approx(e.wdot).epsilon(0.1));
    CHECK(e.integrand_tail < kMaxLsTail);
  }
  CHECK_THROWS_AS(estimate_Ls(g, 2), Error);
  CHECK_THROWS_AS(estimate_Ls(g, 512), Error);
}

TEST_CASE("vertical bound constant is stable under sample doubling") {
  const double c1 = vertical_bound_check(catalog::c1beta(0.75, 0.5, 1.0, 513)).constant;
  const double c2 = vertical_bound_check(catalog::c1beta(0.75, 0.5, 1.0, 1025)).constant;
  CHECK(std::isfinite(c1));
  CHECK(c1 > 0.0);
  CHECK(std::abs(c2 - c1) <= 0.1 * c1);
}
