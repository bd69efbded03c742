#include "lpsquare/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lpsquare/trig.hpp"

namespace lpsquare {

namespace {

constexpr std::int64_t kMaxKernelOrder = std::int64_t{1} << 24;

void check_order(std::int64_t n) {
  if (n < 0 || n > kMaxKernelOrder)
    throw std::invalid_argument("kernel order out of range");
}

constexpr int kAtomMin = 3;
constexpr int kAtomMax = 24;

void check_atom_index(int n) {
  if (n < kAtomMin || n > kAtomMax)
    throw std::invalid_argument("atom index must lie in [3, 24]");
}

}  // namespace

TrigPoly fejer(std::int64_t n) {
  check_order(n);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * n + 1));
  const double denom = static_cast<double>(n + 1);
  for (std::int64_t j = -n; j <= n; ++j)
    c[static_cast<std::size_t>(j + n)] =
        1.0 - static_cast<double>(std::abs(j)) / denom;
  return TrigPoly({{-n, n}}, std::move(c));
}

TrigPoly vallee_poussin(std::int64_t n) {
  check_order(n);
  const std::int64_t top = 2 * n + 1;
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * top + 1));
  const double denom = static_cast<double>(2 * n + 2);
  for (std::int64_t j = -top; j <= top; ++j) {
    const std::int64_t a = std::abs(j);
    // The flat part is written as a literal so these coefficients are 1.0
    // bit-for-bit, not 1.0 up to rounding.
    c[static_cast<std::size_t>(j + top)] =
        (a <= n + 1) ? 1.0 : 2.0 * (1.0 - static_cast<double>(a) / denom);
  }
  return TrigPoly({{-top, top}}, std::move(c));
}

AtomSpec AtomSpec::for_index(int n) {
  check_atom_index(n);
  AtomSpec s;
  s.index = n;
  s.carrier = std::int64_t{1} << (n - 1);
  s.amplitude = static_cast<double>(s.carrier);
  s.support_length = 1.0 / s.amplitude;
  return s;
}

std::complex<double> periodic_atom_coeff(int n, std::int64_t m) {
  const AtomSpec s = AtomSpec::for_index(n);
  if (m == s.carrier) return 1.0;
  const double d = static_cast<double>(s.carrier - m);
  const double t = d * s.support_length;  // exact: d times a power of two
  // A * (e^{2 pi i d h} - 1) / (2 pi i d) written through the half-angle so
  // whole-number t (in particular m = 0) gives an exact zero.
  const double mag = s.amplitude * sinpi(t) / (std::numbers::pi * d);
  return mag * unit_phase(t);
}

GridSignal periodic_atom_samples(int n, std::size_t samples_per_axis) {
  const AtomSpec s = AtomSpec::for_index(n);
  const std::size_t m = samples_per_axis;
  const auto carrier = static_cast<std::uint64_t>(s.carrier);
  if (m % carrier != 0)
    throw std::invalid_argument(
        "grid must subdivide the atom support evenly");
  const std::size_t on = m / carrier;  // samples inside [0, h)
  std::vector<std::complex<double>> vals(m, 0.0);
  for (std::size_t j = 0; j < on; ++j) {
    const double t = 2.0 * static_cast<double>(s.carrier) *
                     (static_cast<double>(j) / static_cast<double>(m));
    vals[j] = s.amplitude * unit_phase(t);
  }
  return GridSignal(1, m, std::move(vals));
}

GridSignal periodic_atom_block(int n, int k, std::size_t samples_per_axis) {
  check_atom_index(n);
  const int a = std::abs(k);
  if (a > 40 || samples_per_axis < (std::size_t{1} << (a + 1)))
    throw std::invalid_argument("grid too small for the requested block");
  const FrequencyRange r = block_range(k);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(r.width()));
  for (std::int64_t j = r.lo; j <= r.hi; ++j)
    c[static_cast<std::size_t>(j - r.lo)] = periodic_atom_coeff(n, j);
  return evaluate_on_grid(TrigPoly({r}, std::move(c)), samples_per_axis);
}

std::string AtomValidationReport::describe() const {
  std::ostringstream os;
  os << (ok() ? "atom ok" : "atom violation:");
  if (!supported_inside) os << " support-leak=" << max_outside;
  if (!l2_bounded) os << " l2=" << l2_norm << ">budget=" << l2_budget;
  if (!x_marginal_cancels || !y_marginal_cancels)
    os << " marginal-residual=" << max_marginal;
  return os.str();
}

AtomValidationReport validate_rectangle_atom(const GridSignal& g,
                                             const IndexRect& rect,
                                             double tol) {
  if (g.dims() != 2)
    throw std::invalid_argument("rectangle atoms live on a 2d grid");
  const std::size_t m = g.samples_per_axis();
  if (rect.x_lo >= rect.x_hi || rect.y_lo >= rect.y_hi || rect.x_hi > m ||
      rect.y_hi > m)
    throw std::invalid_argument("rectangle indices out of range");
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");

  const auto v = g.values();
  const double cell = 1.0 / static_cast<double>(m);
  const double area = static_cast<double>(rect.x_hi - rect.x_lo) * cell *
                      static_cast<double>(rect.y_hi - rect.y_lo) * cell;

  AtomValidationReport rep;
  double peak = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double ab = std::abs(v[i * m + j]);
      peak = std::max(peak, ab);
      sq += ab * ab;
      const bool inside = i >= rect.x_lo && i < rect.x_hi && j >= rect.y_lo &&
                          j < rect.y_hi;
      if (!inside) rep.max_outside = std::max(rep.max_outside, ab);
    }
  const double scale = std::max(1.0, peak);
  rep.supported_inside = rep.max_outside <= tol * scale;
  rep.l2_norm = std::sqrt(sq * cell * cell);
  rep.l2_budget = 1.0 / std::sqrt(area);
  rep.l2_bounded = rep.l2_norm <= rep.l2_budget * (1.0 + tol);

  // Marginal over y for each row x (and vice versa), relative to the mass
  // actually present in that slice.
  double worst_x = 0.0, worst_y = 0.0;
  for (std::size_t i = rect.x_lo; i < rect.x_hi; ++i) {
    std::complex<double> s = 0.0;
    double mass = 0.0;
    for (std::size_t j = rect.y_lo; j < rect.y_hi; ++j) {
      s += v[i * m + j];
      mass += std::abs(v[i * m + j]);
    }
    worst_x = std::max(worst_x, std::abs(s) / std::max(1.0, mass));
  }
  for (std::size_t j = rect.y_lo; j < rect.y_hi; ++j) {
    std::complex<double> s = 0.0;
    double mass = 0.0;
    for (std::size_t i = rect.x_lo; i < rect.x_hi; ++i) {
      s += v[i * m + j];
      mass += std::abs(v[i * m + j]);
    }
    worst_y = std::max(worst_y, std::abs(s) / std::max(1.0, mass));
  }
  rep.max_marginal = std::max(worst_x, worst_y);
  rep.x_marginal_cancels = worst_x <= tol;
  rep.y_marginal_cancels = worst_y <= tol;
  return rep;
}

}  // namespace lpsquare
