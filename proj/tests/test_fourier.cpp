#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpsquare/fourier.hpp"
#include "testutil.hpp"

using namespace lpsquare;
using std::complex;

TEST_CASE("trig poly construction validates its box") {
  CHECK_THROWS(TrigPoly({{3, 1}}, {}));
  CHECK_THROWS(TrigPoly({{0, 1}}, {1.0}));  // box has 2 slots
  CHECK_THROWS(TrigPoly({{0, 0}}, {complex<double>(std::nan(""), 0.0)}));
  std::vector<FrequencyRange> four_dims(4, FrequencyRange{0, 0});
  CHECK_THROWS(TrigPoly(four_dims, std::vector<complex<double>>(1, 1.0)));

  TrigPoly f({{-2, 3}}, {1., 2., 3., 4., 5., 6.});
  CHECK(f.dims() == 1);
  CHECK(f.coeff({-2}) == complex<double>(1.0));
  CHECK(f.coeff({3}) == complex<double>(6.0));
  CHECK(f.max_abs_freq() == 3);
  CHECK_THROWS(f.coeff({4}));
}

TEST_CASE("row-major layout, axis 0 slowest") {
  // 2x3 box: coeff((a,b)) stored at 3*(a-lo0) + (b-lo1)
  TrigPoly f({{0, 1}, {-1, 1}}, {1., 2., 3., 4., 5., 6.});
  CHECK(f.coeff({0, -1}) == complex<double>(1.0));
  CHECK(f.coeff({0, 1}) == complex<double>(3.0));
  CHECK(f.coeff({1, 0}) == complex<double>(5.0));
  CHECK(f.freq_of(4, 0) == 1);
  CHECK(f.freq_of(4, 1) == 0);
}

TEST_CASE("evaluate_on_grid matches direct summation") {
  SUBCASE("single mode lands on the right samples") {
    // e^{2 pi i 3 x} at M=8: values are 8th roots of unity to the 3j
    TrigPoly f({{3, 3}}, {1.0});
    auto g = evaluate_on_grid(f, 8);
    for (std::size_t j = 0; j < 8; ++j) {
      const auto w = std::polar(1.0, 2.0 * std::numbers::pi * 3.0 *
                                         static_cast<double>(j) / 8.0);
      CHECK(std::abs(g.values()[j] - w) < 1e-14);
    }
  }
  SUBCASE("random 1d polynomial") {
    auto f = testutil::random_poly(-13, 22, 901u);
    auto g = evaluate_on_grid(f, 64);
    auto o = testutil::eval_direct(f, 64);
    CHECK(testutil::max_abs_diff(g, o) < 1e-12);
  }
  SUBCASE("negative frequencies wrap correctly") {
    TrigPoly f({{-5, -5}}, {complex<double>(0.0, 2.0)});
    auto g = evaluate_on_grid(f, 16);
    auto o = testutil::eval_direct(f, 16);
    CHECK(testutil::max_abs_diff(g, o) < 1e-13);
  }
  SUBCASE("2d random box") {
    std::vector<complex<double>> c(5 * 7);
    std::mt19937_64 rng(77u);
    for (auto& z : c) z = {testutil::uniform_pm1(rng), testutil::uniform_pm1(rng)};
    TrigPoly f({{-2, 2}, {-3, 3}}, std::move(c));
    auto g = evaluate_on_grid(f, 8);
    auto o = testutil::eval_direct(f, 8);
    CHECK(testutil::max_abs_diff(g, o) < 1e-12);
  }
  SUBCASE("grid must hold the box") {
    auto f = testutil::random_poly(0, 9, 3u);
    CHECK_THROWS(evaluate_on_grid(f, 8));
  }
}

TEST_CASE("coefficients_from_grid inverts evaluate_on_grid") {
  auto f = testutil::random_poly(-31, 30, 19u);
  auto g = evaluate_on_grid(f, 128);
  auto back = coefficients_from_grid(g, {f.range(0)});
  double err = 0.0;
  for (std::size_t i = 0; i < f.coeff_count(); ++i)
    err = std::max(err, std::abs(f.coeffs()[i] - back.coeffs()[i]));
  CHECK(err < 1e-12);

  // unused bins stay empty: widen the requested box
  auto wide = coefficients_from_grid(g, {{-40, 40}});
  CHECK(std::abs(wide.coeff({35})) < 1e-12);
  CHECK(std::abs(wide.coeff({-32}) - f.coeff({-31})) > 0.0);  // distinct slots
  CHECK(std::abs(wide.coeff({30}) - f.coeff({30})) < 1e-12);

  CHECK_THROWS(coefficients_from_grid(g, {{0, 200}}));
}

TEST_CASE("admissible_grid covers twice the bandwidth") {
  TrigPoly f({{-5, 5}}, std::vector<complex<double>>(11, 1.0));
  CHECK(admissible_grid(f) == 32);          // 2*(2*5+2) = 24 -> 32
  CHECK(admissible_grid(f, 1) == 16);       // 12 -> 16
  CHECK(admissible_grid(f, 4) == 64);       // 48 -> 64
  CHECK_THROWS(admissible_grid(f, 0));
}

TEST_CASE("block_range and block_index_of") {
  CHECK(block_range(0) == FrequencyRange{0, 0});
  CHECK(block_range(1) == FrequencyRange{1, 1});
  CHECK(block_range(2) == FrequencyRange{2, 3});
  CHECK(block_range(4) == FrequencyRange{8, 15});
  CHECK(block_range(-1) == FrequencyRange{-1, -1});
  CHECK(block_range(-3) == FrequencyRange{-7, -4});

  SUBCASE("blocks partition the integers") {
    for (std::int64_t m = -40; m <= 40; ++m) {
      const int k = block_index_of(m);
      CHECK(block_range(k).contains(m));
      // no neighbour claims it
      if (k != 0) {
        CHECK_FALSE(block_range(k - 1).contains(m));
        CHECK_FALSE(block_range(k + 1).contains(m));
      }
    }
  }
}

TEST_CASE("delta_block restricts coefficients and sums back to f") {
  auto f = testutil::random_poly(-16, 16, 5u);

  SUBCASE("restriction keeps exactly the block") {
    auto d3 = delta_block(f, 3);
    for (std::size_t flat = 0; flat < d3.coeff_count(); ++flat) {
      const auto m = d3.freq_of(flat, 0);
      if (m >= 4 && m <= 7)
        CHECK(d3.coeffs()[flat] == f.coeffs()[flat]);
      else
        CHECK(d3.coeffs()[flat] == complex<double>(0.0));
    }
  }

  SUBCASE("sum over blocks reproduces every coefficient exactly") {
    std::vector<complex<double>> acc(f.coeff_count(), 0.0);
    for (int k = -5; k <= 5; ++k) {
      auto dk = delta_block(f, k);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += dk.coeffs()[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
      CHECK(acc[i] == f.coeffs()[i]);  // disjoint supports, so exact
  }

  SUBCASE("idempotence and disjointness") {
    auto d = delta_block(f, 4);
    auto dd = delta_block(d, 4);
    for (std::size_t i = 0; i < d.coeff_count(); ++i)
      CHECK(dd.coeffs()[i] == d.coeffs()[i]);
    auto d34 = delta_block(delta_block(f, 3), 4);
    for (const auto& c : d34.coeffs()) CHECK(c == complex<double>(0.0));
  }
}

TEST_CASE("delta_block_nd equals iterated per-axis restriction") {
  std::vector<complex<double>> c(9 * 9);
  std::mt19937_64 rng(11u);
  for (auto& z : c) z = {testutil::uniform_pm1(rng), testutil::uniform_pm1(rng)};
  TrigPoly f({{-4, 4}, {-4, 4}}, std::move(c));

  const int ks[2] = {2, -1};
  auto joint = delta_block_nd(f, ks);
  auto iterated = delta_block_axis(delta_block_axis(f, 0, 2), 1, -1);
  for (std::size_t i = 0; i < joint.coeff_count(); ++i)
    CHECK(joint.coeffs()[i] == iterated.coeffs()[i]);

  CHECK_THROWS(delta_block_nd(f, std::span<const int>(ks, 1)));
  CHECK_THROWS(delta_block(f, 1));  // 2d input
}

TEST_CASE("tensor_product multiplies coefficient boxes") {
  TrigPoly f({{0, 1}}, {complex<double>(1.0), complex<double>(2.0)});
  TrigPoly g({{-1, 0}}, {complex<double>(0.0, 1.0), complex<double>(3.0)});
  auto h = tensor_product(f, g);
  CHECK(h.dims() == 2);
  CHECK(h.coeff({1, -1}) == complex<double>(0.0, 2.0));
  CHECK(h.coeff({0, 0}) == complex<double>(3.0));

  // samples factor: h(x, y) = f(x) g(y)
  auto hf = evaluate_on_grid(h, 8);
  auto gf = evaluate_on_grid(f, 8);
  auto gg = evaluate_on_grid(g, 8);
  double err = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      err = std::max(err, std::abs(hf.values()[8 * i + j] -
                                   gf.values()[i] * gg.values()[j]));
  CHECK(err < 1e-13);

  TrigPoly two({{0, 0}, {0, 0}}, {complex<double>(1.0)});
  CHECK_THROWS(tensor_product(two, two));  // would be 4d
}

TEST_CASE("parseval on admissible grids") {
  auto f = testutil::random_poly(-9, 14, 23u);
  const std::size_t m = admissible_grid(f);
  auto g = evaluate_on_grid(f, m);
  double grid_sq = 0.0;
  for (const auto& v : g.values()) grid_sq += std::norm(v);
  grid_sq /= static_cast<double>(m);
  double coef_sq = 0.0;
  for (const auto& c : f.coeffs()) coef_sq += std::norm(c);
  CHECK(std::abs(grid_sq - coef_sq) < 1e-12 * std::max(1.0, coef_sq));
}
