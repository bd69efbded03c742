#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace lpsquare {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]. Nodes from Newton iteration on P_n;
// results are cached per order. Supported orders: 4 <= n <= 256.
const QuadratureRule& gauss_legendre_rule(int n);

// Gauss-Laguerre rule for integrals of f(x) e^{-x} over [0, inf).
const QuadratureRule& gauss_laguerre_rule(int n);

using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Integral of f over [a, b] with an n-node Gauss-Legendre rule,
// n in {16, 32, 64, 128}.
std::complex<double> gauss_quadrature(const ComplexIntegrand& f, double a,
                                      double b, int nodes);

struct QuadResult {
  std::complex<double> value;
  double doubling_delta = 0.0;
  bool converged = false;
};

// Evaluates at 64 and 128 nodes; converged when the two differ by less than
// tol in absolute value. The 128-node value is reported.
QuadResult gauss_quadrature_checked(const ComplexIntegrand& f, double a,
                                    double b, double tol = 1e-10);

}  // namespace lpsquare
