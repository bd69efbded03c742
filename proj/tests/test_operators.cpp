#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lpsquare/kernels.hpp"
#include "lpsquare/norms.hpp"
#include "lpsquare/operators.hpp"
#include "testutil.hpp"

using namespace lpsquare;
using std::complex;

TEST_CASE("sign pattern basics") {
  auto p = SignPattern::all_plus(3);
  CHECK(p.breadth() == 3);
  for (int k = -3; k <= 3; ++k) CHECK(p.sign(k) == 1);
  CHECK_THROWS(p.sign(4));
  CHECK_THROWS(SignPattern(2, {1, 1, 1}));       // wrong count
  CHECK_THROWS(SignPattern(1, {1, 0, -1}));      // zero sign

  auto r = SignPattern::from_seed(5, 99u);
  auto r2 = SignPattern::from_seed(5, 99u);
  CHECK(r.signs() == r2.signs());                // deterministic
  auto fl = r.flipped();
  for (int k = -5; k <= 5; ++k) CHECK(fl.sign(k) == -r.sign(k));
}

TEST_CASE("default_breadth covers the degree") {
  CHECK(default_breadth(TrigPoly({{0, 0}}, {1.0})) == 1);
  CHECK(default_breadth(testutil::random_poly(-4, 4, 1u)) == 3);
  CHECK(default_breadth(testutil::random_poly(-5, 5, 1u)) == 4);
  auto f = testutil::random_poly(-37, 37, 2u);
  const int k = default_breadth(f);
  CHECK(block_range(k).hi >= 37);
}

TEST_CASE("square_function against per-block assembly") {
  auto f = testutil::random_poly(-20, 20, 7u);
  const std::size_t m = 64;
  auto s = square_function(f, m);

  // oracle: sum |Delta_k f|^2 over blocks, assembled one FFT at a time
  std::vector<double> sq(m, 0.0);
  for (int k = -5; k <= 5; ++k) {
    auto g = evaluate_on_grid(delta_block(f, k), m);
    for (std::size_t j = 0; j < m; ++j) sq[j] += std::norm(g.values()[j]);
  }
  double err = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    err = std::max(err, std::abs(s.values()[j].real() - std::sqrt(sq[j])));
  CHECK(err < 1e-12);
  for (std::size_t j = 0; j < m; ++j) CHECK(s.values()[j].imag() == 0.0);
}

TEST_CASE("square_function parseval") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    auto f = testutil::random_poly(-33, 40, seed);
    const std::size_t m = admissible_grid(f);
    auto s = square_function(f, m);
    const double lhs = lp_norm(s, 2.0);
    double sq = 0.0;
    for (const auto& c : f.coeffs()) sq += std::norm(c);
    CHECK(lhs == doctest::Approx(std::sqrt(sq)).epsilon(1e-12));
  }
}

TEST_CASE("square_function of a single block is the block modulus") {
  auto f = testutil::random_poly(4, 7, 3u);  // lives entirely in block 3
  auto s = square_function(f, 32);
  auto g = evaluate_on_grid(f, 32);
  for (std::size_t j = 0; j < 32; ++j)
    CHECK(s.values()[j].real() ==
          doctest::Approx(std::abs(g.values()[j])).epsilon(1e-13));
}

TEST_CASE("square_function_nd factorizes on tensor inputs") {
  auto f = testutil::random_poly(-6, 9, 21u);
  auto g = testutil::random_poly(-9, 5, 22u);
  auto h = tensor_product(f, g);
  const std::size_t m = 32;
  auto s2 = square_function_nd(h, m);
  auto sf = square_function(f, m);
  auto sg = square_function(g, m);
  double err = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      err = std::max(err, std::abs(s2.values()[i * m + j].real() -
                                   sf.values()[i].real() *
                                       sg.values()[j].real()));
  CHECK(err < 1e-12);
  CHECK_THROWS(square_function_nd(f, m));  // 1d input
}

TEST_CASE("t_omega flips exactly the chosen blocks") {
  auto f = testutil::random_poly(-10, 10, 31u);
  SUBCASE("all-plus is the identity") {
    auto g = t_omega(f, SignPattern::all_plus(4));
    for (std::size_t i = 0; i < f.coeff_count(); ++i)
      CHECK(g.coeffs()[i] == f.coeffs()[i]);
  }
  SUBCASE("single flipped block") {
    std::vector<std::int8_t> s(9, 1);
    s[4 + 2] = -1;  // block +2 = {2, 3}
    auto g = t_omega(f, SignPattern(4, std::move(s)));
    for (std::size_t i = 0; i < f.coeff_count(); ++i) {
      const auto m = f.freq_of(i, 0);
      if (m == 2 || m == 3)
        CHECK(g.coeffs()[i] == -f.coeffs()[i]);
      else
        CHECK(g.coeffs()[i] == f.coeffs()[i]);
    }
  }
  SUBCASE("l2 norm is preserved exactly") {
    auto g = t_omega(f, SignPattern::from_seed(4, 8u));
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < f.coeff_count(); ++i) {
      a += std::norm(f.coeffs()[i]);
      b += std::norm(g.coeffs()[i]);
    }
    CHECK(a == b);
  }
  CHECK_THROWS(t_omega(f, SignPattern::all_plus(3)));  // needs breadth 4
}

TEST_CASE("tensor_multiplier multiplies per-axis signs") {
  auto f = testutil::random_poly(-4, 4, 41u);
  auto g = testutil::random_poly(-4, 4, 42u);
  auto h = tensor_product(f, g);
  auto sx = SignPattern::from_seed(3, 1u);
  auto sy = SignPattern::from_seed(3, 2u);
  const SignPattern per_axis[2] = {sx, sy};
  auto th = tensor_multiplier(h, per_axis);
  auto tf = t_omega(f, sx);
  auto tg = t_omega(g, sy);
  auto expect = tensor_product(tf, tg);
  for (std::size_t i = 0; i < th.coeff_count(); ++i)
    CHECK(th.coeffs()[i] == expect.coeffs()[i]);
}

TEST_CASE("rademacher_average equals the square function") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto f = testutil::random_poly(-30, 30, seed);
    const std::size_t m = 64;
    auto avg = rademacher_average(f, m, 6);
    auto s = square_function(f, m);
    double err = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      err = std::max(err,
                     std::abs(avg.values()[j].real() - s.values()[j].real()));
    CHECK(err < 1e-10);
  }
}

TEST_CASE("rademacher first moment sits in the Khintchine window") {
  auto f = testutil::random_poly(-25, 25, 55u);
  const std::size_t m = 64;
  auto first = rademacher_first_moment(f, m, 6);
  auto s = square_function(f, m);
  const double lo = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < m; ++j) {
    const double ratio = first.values()[j].real() /
                         std::max(1e-300, s.values()[j].real());
    CHECK(ratio >= lo - 1e-12);
    CHECK(ratio <= 1.0 + 1e-12);
  }

  // single active block: |T f| is sign-invariant, moments collapse
  auto one_block = testutil::random_poly(8, 15, 56u);
  auto f1 = rademacher_first_moment(one_block, 64, 6);
  auto s1 = square_function(one_block, 64);
  for (std::size_t j = 0; j < 64; ++j)
    CHECK(f1.values()[j].real() ==
          doctest::Approx(s1.values()[j].real()).epsilon(1e-13));
}

TEST_CASE("rademacher enumeration guards") {
  auto f = testutil::random_poly(-10, 10, 66u);
  CHECK_THROWS(rademacher_average(f, 32, 13));  // 2K+1 = 27 > 25
  CHECK_THROWS(rademacher_average(f, 32, 2));   // does not cover block 4
}
