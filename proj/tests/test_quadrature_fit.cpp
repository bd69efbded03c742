#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpsquare/fit.hpp"
#include "lpsquare/quadrature.hpp"

using namespace lpsquare;
using std::complex;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int n : {8, 16, 32}) {
    const auto& rule = gauss_legendre_rule(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // degree 2n-1 monomial on [-1,1]
    double s = 0.0;
    const int deg = 2 * n - 1;
    for (int i = 0; i < n; ++i)
      s += rule.weights[i] * std::pow(rule.nodes[i], deg);
    CHECK(std::abs(s) < 1e-13);  // odd power integrates to zero
    double s2 = 0.0;
    for (int i = 0; i < n; ++i)
      s2 += rule.weights[i] * std::pow(rule.nodes[i], 4);
    CHECK(s2 == doctest::Approx(2.0 / 5.0).epsilon(1e-13));
  }
  CHECK_THROWS(gauss_legendre_rule(2));
}

TEST_CASE("gauss-laguerre rule integrates against e^{-x}") {
  const auto& rule = gauss_laguerre_rule(32);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));  // int e^{-x} = 1
  // moments: int x^k e^{-x} = k!
  double m1 = 0.0, m3 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    m1 += rule.weights[i] * rule.nodes[i];
    m3 += rule.weights[i] * std::pow(rule.nodes[i], 3);
  }
  CHECK(m1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m3 == doctest::Approx(6.0).epsilon(1e-12));
  // a fractional power, analytic on the domain:
  // int sqrt(1+x) e^{-x} dx = 1 + e * (sqrt(pi)/2) * erfc(1)
  double fr = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    fr += rule.weights[i] * std::sqrt(1.0 + rule.nodes[i]);
  const double closed = 1.0 + std::numbers::e *
                                  (std::sqrt(std::numbers::pi) / 2.0) *
                                  std::erfc(1.0);
  CHECK(fr == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("gauss_quadrature on closed forms") {
  SUBCASE("linear is exact at every node count") {
    for (int n : {16, 32, 64, 128}) {
      auto v = gauss_quadrature([](double x) { return complex<double>(x); },
                                0.0, 1.0, n);
      CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(v.imag() == 0.0);
    }
  }
  SUBCASE("full oscillations cancel") {
    auto v = gauss_quadrature(
        [](double x) {
          return std::polar(1.0, 2.0 * std::numbers::pi * 8.0 * x);
        },
        0.0, 1.0, 64);
    CHECK(std::abs(v) < 1e-12);
  }
  SUBCASE("logarithmic antiderivative") {
    const double x = 0.37, h = 1.0 / 64.0;
    auto v = gauss_quadrature(
        [x](double y) { return complex<double>(1.0 / (x - y)); }, 0.0, h, 64);
    CHECK(v.real() == doctest::Approx(std::log(x / (x - h))).epsilon(1e-12));
  }
  CHECK_THROWS(gauss_quadrature([](double) { return complex<double>(0.0); },
                                0.0, 1.0, 20));
  CHECK_THROWS(gauss_quadrature([](double) { return complex<double>(0.0); },
                                1.0, 1.0, 32));
}

TEST_CASE("doubling check reports convergence honestly") {
  auto smooth = gauss_quadrature_checked(
      [](double x) { return complex<double>(std::exp(-x * x)); }, 0.0, 1.0);
  CHECK(smooth.converged);
  CHECK(smooth.doubling_delta < 1e-12);
  CHECK(smooth.value.real() == doctest::Approx(0.7468241328124271).epsilon(1e-12));

  // an integrand quadrature cannot settle on: high oscillation + kink
  auto rough = gauss_quadrature_checked(
      [](double x) {
        return complex<double>(std::fabs(std::sin(700.0 / (x + 1e-3))));
      },
      0.0, 1.0);
  CHECK_FALSE(rough.converged);
}

TEST_CASE("fit_exponent recovers power laws") {
  SUBCASE("exact three-halves law") {
    std::vector<std::pair<double, double>> pts;
    for (double s : {2.0, 4.0, 8.0, 16.0})
      pts.emplace_back(s, std::pow(s, 1.5));
    auto fit = fit_exponent(pts);
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(std::abs(fit.intercept) < 1e-13);
    CHECK(fit.max_residual <= 1e-12);
    CHECK(fit.points.size() == 4);
  }
  SUBCASE("prefactor lands in the intercept") {
    std::vector<std::pair<double, double>> pts;
    for (double s : {3.0, 9.0, 27.0}) pts.emplace_back(s, 7.0 * s * s * s);
    auto fit = fit_exponent(pts);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  }
  SUBCASE("small alternating perturbation barely moves the slope") {
    std::vector<std::pair<double, double>> pts;
    double sign = 1.0;
    for (double s : {2.0, 4.0, 8.0, 16.0, 32.0}) {
      pts.emplace_back(s, std::pow(s, 1.5) * (1.0 + 0.01 * sign));
      sign = -sign;
    }
    auto fit = fit_exponent(pts);
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(0.02));
  }
  std::vector<std::pair<double, double>> bad = {{1.0, 1.0}, {2.0, -1.0},
                                                {3.0, 1.0}};
  CHECK_THROWS(fit_exponent(bad));
  std::vector<std::pair<double, double>> two = {{1.0, 1.0}, {2.0, 2.0}};
  CHECK_THROWS(fit_exponent(two));
  std::vector<std::pair<double, double>> flat = {{2.0, 1.0}, {2.0, 2.0},
                                                 {2.0, 3.0}};
  CHECK_THROWS(fit_exponent(flat));
}
