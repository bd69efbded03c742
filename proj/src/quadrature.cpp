#include "lpsquare/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lpsquare {

namespace {

// Legendre P_n(x) and its derivative via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule make_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi-style initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 64; ++it) {
      legendre(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre(n, x, p, dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

// Laguerre L_n(x) and derivative.
void laguerre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = 1.0 - x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0 - x) * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (p1 - p0) / x;
}

QuadratureRule make_laguerre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    // classical starting guesses, then Newton
    if (i == 0)
      x = 3.0 / (1.0 + 2.4 * n);
    else if (i == 1)
      x += 15.0 / (1.0 + 2.5 * n);
    else
      x += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (x - rule.nodes[i - 2]);
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      laguerre(n, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-14 * std::max(1.0, x)) break;
    }
    laguerre(n, x, p, dp);
    rule.nodes[i] = x;
    // w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2)
    double pn1, dpn1;
    laguerre(n + 1, x, pn1, dpn1);
    rule.weights[i] = x / ((n + 1.0) * (n + 1.0) * pn1 * pn1);
  }
  return rule;
}

const QuadratureRule& cached(std::map<int, QuadratureRule>& cache,
                             std::mutex& mu, int n,
                             QuadratureRule (*make)(int)) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

}  // namespace

const QuadratureRule& gauss_legendre_rule(int n) {
  if (n < 4 || n > 256)
    throw std::invalid_argument("unsupported Gauss-Legendre order");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mu;
  return cached(cache, mu, n, make_legendre);
}

const QuadratureRule& gauss_laguerre_rule(int n) {
  if (n < 4 || n > 256)
    throw std::invalid_argument("unsupported Gauss-Laguerre order");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mu;
  return cached(cache, mu, n, make_laguerre);
}

std::complex<double> gauss_quadrature(const ComplexIntegrand& f, double a,
                                      double b, int nodes) {
  if (nodes != 16 && nodes != 32 && nodes != 64 && nodes != 128)
    throw std::invalid_argument("node count must be 16, 32, 64 or 128");
  if (!(a < b)) throw std::invalid_argument("empty integration interval");
  const auto& rule = gauss_legendre_rule(nodes);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> s = 0.0;
  for (int i = 0; i < nodes; ++i)
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s;
}

QuadResult gauss_quadrature_checked(const ComplexIntegrand& f, double a,
                                    double b, double tol) {
  QuadResult r;
  const auto coarse = gauss_quadrature(f, a, b, 64);
  r.value = gauss_quadrature(f, a, b, 128);
  r.doubling_delta = std::abs(r.value - coarse);
  r.converged = r.doubling_delta < tol;
  return r;
}

}  // namespace lpsquare
