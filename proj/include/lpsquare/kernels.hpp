#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "lpsquare/fourier.hpp"

namespace lpsquare {

// Fejer kernel of order n: coefficients 1 - |j|/(n+1) on [-n, n].
TrigPoly fejer(std::int64_t n);

// de la Vallee Poussin kernel of order n, supported on [-(2n+1), 2n+1].
// Coefficients are exactly 1 for |j| <= n+1 and fall off linearly beyond,
// matching 2*fejer(2n+1) - fejer(n).
TrigPoly vallee_poussin(std::int64_t n);

// Modulated-indicator test function a_N: amplitude 2^(N-1) on the interval
// [0, 2^-(N-1)), carried at frequency 2^(N-1). Unit mass, vanishing mean
// after carrier removal. Valid for 3 <= N <= 24.
struct AtomSpec {
  int index = 0;                // N
  std::int64_t carrier = 0;     // 2^(N-1)
  double support_length = 0.0;  // 2^-(N-1)
  double amplitude = 0.0;       // 2^(N-1)

  static AtomSpec for_index(int n);
};

// Fourier coefficient of a_N at frequency m, in closed form.
std::complex<double> periodic_atom_coeff(int n, std::int64_t m);

// Exact samples of a_N itself on an M-point grid (requires M * 2^-(N-1) to
// be a positive integer so the support is a whole number of cells).
GridSignal periodic_atom_samples(int n, std::size_t samples_per_axis);

// Grid samples of the dyadic block k of a_N. Requires M >= 2^(|k|+1).
GridSignal periodic_atom_block(int n, int k, std::size_t samples_per_axis);

// Index rectangle [x_lo, x_hi) x [y_lo, y_hi) on a 2d grid.
struct IndexRect {
  std::size_t x_lo = 0, x_hi = 0;
  std::size_t y_lo = 0, y_hi = 0;
};

struct AtomValidationReport {
  bool supported_inside = false;   // vanishes off the rectangle
  bool l2_bounded = false;         // ||a||_2 <= |R|^(-1/2) (tolerance slack)
  bool x_marginal_cancels = false; // row sums over the rectangle vanish
  bool y_marginal_cancels = false; // column sums vanish
  double l2_norm = 0.0;
  double l2_budget = 0.0;
  double max_outside = 0.0;
  double max_marginal = 0.0;
  bool ok() const noexcept {
    return supported_inside && l2_bounded && x_marginal_cancels &&
           y_marginal_cancels;
  }
  std::string describe() const;
};

// Checks the rectangle-atom axioms for a 2d grid function: support inside
// the rectangle, L2 norm at most |R|^(-1/2), and cancellation of both
// marginals. Integrals are grid averages; comparisons use the given slack.
AtomValidationReport validate_rectangle_atom(const GridSignal& g,
                                             const IndexRect& rect,
                                             double tol);

}  // namespace lpsquare
