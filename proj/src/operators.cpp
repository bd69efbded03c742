#include "lpsquare/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lpsquare/random.hpp"

namespace lpsquare {

SignPattern::SignPattern(int breadth, std::vector<std::int8_t> signs)
    : breadth_(breadth), signs_(std::move(signs)) {
  if (breadth_ < 0 || breadth_ > 62)
    throw std::invalid_argument("breadth out of range");
  if (signs_.size() != static_cast<std::size_t>(2 * breadth_ + 1))
    throw std::invalid_argument("sign count must be 2*breadth + 1");
  for (auto s : signs_)
    if (s != 1 && s != -1)
      throw std::invalid_argument("signs must be +1 or -1");
}

SignPattern SignPattern::all_plus(int breadth) {
  return SignPattern(breadth,
                     std::vector<std::int8_t>(2 * breadth + 1, 1));
}

SignPattern SignPattern::from_seed(int breadth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> s(2 * breadth + 1);
  for (auto& x : s) x = (rng() >> 63) ? std::int8_t{1} : std::int8_t{-1};
  return SignPattern(breadth, std::move(s));
}

int SignPattern::sign(int block) const {
  if (block < -breadth_ || block > breadth_)
    throw std::invalid_argument("block outside the pattern's breadth");
  return signs_[static_cast<std::size_t>(block + breadth_)];
}

SignPattern SignPattern::flipped() const {
  std::vector<std::int8_t> s(signs_);
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return SignPattern(breadth_, std::move(s));
}

int default_breadth(const TrigPoly& f) {
  const std::int64_t d = f.max_abs_freq();
  if (d <= 1) return 1;
  return static_cast<int>(
             std::bit_width(static_cast<std::uint64_t>(d - 1))) + 1;
}

namespace {

// Inclusive block-index span covering a 1d frequency range.
std::pair<int, int> block_span(const FrequencyRange& r) {
  return {block_index_of(r.lo), block_index_of(r.hi)};
}

void check_1d(const TrigPoly& f, std::size_t m) {
  if (f.dims() != 1)
    throw std::invalid_argument("expected a one-dimensional input");
  if (static_cast<std::int64_t>(m) < f.range(0).width())
    throw std::invalid_argument("grid too small for the coefficient box");
}

// Scatters the coefficients of f lying in block blk into DFT bins.
// Returns the number of nonzero coefficients placed.
std::size_t scatter_block(const TrigPoly& f, const FrequencyRange& blk,
                          std::size_t m,
                          std::span<std::complex<double>> buf) {
  const auto mm = static_cast<std::int64_t>(m);
  std::size_t placed = 0;
  const auto coeffs = f.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    const std::int64_t mf = f.freq_of(flat, 0);
    if (!blk.contains(mf) || coeffs[flat] == std::complex<double>(0.0))
      continue;
    buf[static_cast<std::size_t>(((mf % mm) + mm) % mm)] = coeffs[flat];
    ++placed;
  }
  return placed;
}

}  // namespace

GridSignal square_function(const TrigPoly& f, std::size_t samples_per_axis) {
  check_1d(f, samples_per_axis);
  const auto [k_lo, k_hi] = block_span(f.range(0));
  FourierTransform ft(1, samples_per_axis);
  std::vector<double> sumsq(samples_per_axis, 0.0);
  for (int k = k_lo; k <= k_hi; ++k) {
    ft.zero_buffer();
    if (scatter_block(f, block_range(k), samples_per_axis, ft.buffer()) == 0)
      continue;
    ft.execute_backward();
    const auto buf = ft.buffer();
    for (std::size_t j = 0; j < samples_per_axis; ++j)
      sumsq[j] += std::norm(buf[j]);
  }
  std::vector<std::complex<double>> vals(samples_per_axis);
  for (std::size_t j = 0; j < samples_per_axis; ++j)
    vals[j] = std::sqrt(sumsq[j]);
  return GridSignal(1, samples_per_axis, std::move(vals));
}

GridSignal square_function_nd(const TrigPoly& f,
                              std::size_t samples_per_axis) {
  const int d = f.dims();
  if (d < 2)
    throw std::invalid_argument("use square_function for 1d inputs");
  const std::size_t m = samples_per_axis;
  for (int a = 0; a < d; ++a)
    if (static_cast<std::int64_t>(m) < f.range(a).width())
      throw std::invalid_argument("grid too small for the coefficient box");

  // bucket every coefficient by its block tuple
  int lo_k[3], n_k[3];
  std::size_t tuple_count = 1;
  for (int a = 0; a < d; ++a) {
    const auto [bl, bh] = block_span(f.range(a));
    lo_k[a] = bl;
    n_k[a] = bh - bl + 1;
    tuple_count *= static_cast<std::size_t>(n_k[a]);
  }
  std::vector<std::vector<std::size_t>> buckets(tuple_count);
  const auto coeffs = f.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    if (coeffs[flat] == std::complex<double>(0.0)) continue;
    std::size_t t = 0;
    for (int a = 0; a < d; ++a)
      t = t * static_cast<std::size_t>(n_k[a]) +
          static_cast<std::size_t>(block_index_of(f.freq_of(flat, a)) -
                                   lo_k[a]);
    buckets[t].push_back(flat);
  }

  FourierTransform ft(d, m);
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= m;
  std::vector<double> sumsq(total, 0.0);
  const auto mm = static_cast<std::int64_t>(m);
  for (std::size_t t = 0; t < tuple_count; ++t) {
    if (buckets[t].empty()) continue;
    ft.zero_buffer();
    auto buf = ft.buffer();
    for (std::size_t flat : buckets[t]) {
      std::size_t bin = 0;
      for (int a = 0; a < d; ++a) {
        const std::int64_t mf = ((f.freq_of(flat, a) % mm) + mm) % mm;
        bin = bin * m + static_cast<std::size_t>(mf);
      }
      buf[bin] = coeffs[flat];
    }
    ft.execute_backward();
    for (std::size_t j = 0; j < total; ++j) sumsq[j] += std::norm(buf[j]);
  }
  std::vector<std::complex<double>> vals(total);
  for (std::size_t j = 0; j < total; ++j) vals[j] = std::sqrt(sumsq[j]);
  return GridSignal(d, m, std::move(vals));
}

namespace {

void check_coverage(const FrequencyRange& r, const SignPattern& signs) {
  const auto [bl, bh] = block_span(r);
  if (bl < -signs.breadth() || bh > signs.breadth())
    throw std::invalid_argument(
        "sign pattern breadth does not cover the input's blocks");
}

}  // namespace

TrigPoly t_omega(const TrigPoly& f, const SignPattern& signs) {
  if (f.dims() != 1)
    throw std::invalid_argument("t_omega expects a one-dimensional input");
  check_coverage(f.range(0), signs);
  std::vector<std::complex<double>> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t flat = 0; flat < c.size(); ++flat)
    if (signs.sign(block_index_of(f.freq_of(flat, 0))) < 0) c[flat] = -c[flat];
  return TrigPoly(f.ranges(), std::move(c));
}

TrigPoly tensor_multiplier(const TrigPoly& f,
                           std::span<const SignPattern> per_axis) {
  if (static_cast<int>(per_axis.size()) != f.dims())
    throw std::invalid_argument("need one sign pattern per axis");
  for (int a = 0; a < f.dims(); ++a)
    check_coverage(f.range(a), per_axis[static_cast<std::size_t>(a)]);
  std::vector<std::complex<double>> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    int s = 1;
    for (int a = 0; a < f.dims(); ++a)
      s *= per_axis[static_cast<std::size_t>(a)].sign(
          block_index_of(f.freq_of(flat, a)));
    if (s < 0) c[flat] = -c[flat];
  }
  return TrigPoly(f.ranges(), std::move(c));
}

namespace {

// Exact moments of |sum_k eps_k Delta_k f| over all sign choices on the
// blocks meeting f's range. Blocks outside the range contribute nothing, so
// averaging over their signs is a no-op and they are skipped; the result is
// identical to the full 2^(2K+1) average.
std::vector<double> rademacher_moments(const TrigPoly& f, std::size_t m,
                                       int breadth, bool second_moment) {
  check_1d(f, m);
  if (2 * breadth + 1 > 25)
    throw std::invalid_argument("breadth too large to enumerate exactly");
  const auto [k_lo, k_hi] = block_span(f.range(0));
  if (k_lo < -breadth || k_hi > breadth)
    throw std::invalid_argument(
        "breadth does not cover the input's blocks");

  std::vector<std::vector<std::complex<double>>> parts;
  FourierTransform ft(1, m);
  for (int k = k_lo; k <= k_hi; ++k) {
    ft.zero_buffer();
    if (scatter_block(f, block_range(k), m, ft.buffer()) == 0) continue;
    ft.execute_backward();
    const auto buf = ft.buffer();
    parts.emplace_back(buf.begin(), buf.end());
  }

  std::vector<double> acc(m, 0.0);
  const std::size_t nb = parts.size();
  std::vector<std::complex<double>> u(m, 0.0);
  for (const auto& p : parts)
    for (std::size_t j = 0; j < m; ++j) u[j] += p[j];
  std::vector<int> sign(nb, 1);

  const std::uint64_t patterns = std::uint64_t{1} << nb;
  auto absorb = [&] {
    if (second_moment)
      for (std::size_t j = 0; j < m; ++j) acc[j] += std::norm(u[j]);
    else
      for (std::size_t j = 0; j < m; ++j) acc[j] += std::abs(u[j]);
  };
  absorb();
  for (std::uint64_t t = 1; t < patterns; ++t) {
    // Gray-code step: exactly one block flips per pattern
    const auto b = static_cast<std::size_t>(std::countr_zero(t));
    const double step = -2.0 * sign[b];
    sign[b] = -sign[b];
    const auto& p = parts[b];
    for (std::size_t j = 0; j < m; ++j) u[j] += step * p[j];
    absorb();
  }
  const double inv = 1.0 / static_cast<double>(patterns);
  for (auto& x : acc) x *= inv;
  return acc;
}

GridSignal moments_to_signal(std::vector<double> acc, std::size_t m,
                             bool take_sqrt) {
  std::vector<std::complex<double>> vals(m);
  for (std::size_t j = 0; j < m; ++j)
    vals[j] = take_sqrt ? std::sqrt(acc[j]) : acc[j];
  return GridSignal(1, m, std::move(vals));
}

}  // namespace

GridSignal rademacher_average(const TrigPoly& f, std::size_t samples_per_axis,
                              int breadth) {
  return moments_to_signal(
      rademacher_moments(f, samples_per_axis, breadth, true),
      samples_per_axis, true);
}

GridSignal rademacher_first_moment(const TrigPoly& f,
                                   std::size_t samples_per_axis, int breadth) {
  return moments_to_signal(
      rademacher_moments(f, samples_per_axis, breadth, false),
      samples_per_axis, false);
}

}  // namespace lpsquare
