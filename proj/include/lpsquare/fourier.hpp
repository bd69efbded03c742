#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lpsquare {

// Closed integer interval [lo, hi] of frequencies along one axis.
struct FrequencyRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t width() const noexcept { return hi - lo + 1; }
  bool contains(std::int64_t m) const noexcept { return m >= lo && m <= hi; }
  bool operator==(const FrequencyRange&) const = default;
};

// Trigonometric polynomial on the d-torus, d <= 3. Coefficients are stored
// densely over the product of per-axis frequency ranges, row-major with axis 0
// slowest. A coefficient for frequency (m_1, ..., m_d) multiplies
// exp(2*pi*i*(m_1*x_1 + ... + m_d*x_d)).
class TrigPoly {
 public:
  TrigPoly(std::vector<FrequencyRange> ranges,
           std::vector<std::complex<double>> coeffs);

  int dims() const noexcept { return static_cast<int>(ranges_.size()); }
  const std::vector<FrequencyRange>& ranges() const noexcept { return ranges_; }
  const FrequencyRange& range(int axis) const;

  std::size_t coeff_count() const noexcept { return coeffs_.size(); }
  std::span<const std::complex<double>> coeffs() const noexcept {
    return coeffs_;
  }
  std::span<std::complex<double>> mutable_coeffs() noexcept { return coeffs_; }

  std::complex<double> coeff(std::span<const std::int64_t> freq) const;
  std::complex<double> coeff(std::initializer_list<std::int64_t> freq) const;

  std::size_t flat_index(std::span<const std::int64_t> freq) const;
  std::int64_t freq_of(std::size_t flat, int axis) const;

  // Largest |m| over all axes of the coefficient box (not of the support).
  std::int64_t max_abs_freq() const noexcept;

 private:
  std::vector<FrequencyRange> ranges_;
  std::vector<std::size_t> strides_;
  std::vector<std::complex<double>> coeffs_;
};

// Samples of a function on the uniform grid (j_1/M, ..., j_d/M), row-major
// with axis 0 slowest; values.size() == M^d.
class GridSignal {
 public:
  GridSignal(int dims, std::size_t samples_per_axis,
             std::vector<std::complex<double>> values);

  int dims() const noexcept { return dims_; }
  std::size_t samples_per_axis() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::complex<double>> values() const noexcept {
    return values_;
  }
  std::span<std::complex<double>> mutable_values() noexcept { return values_; }

 private:
  int dims_;
  std::size_t m_;
  std::vector<std::complex<double>> values_;
};

// In-place complex DFT engine of fixed shape M^d (d <= 3). Forward is the
// e^{-2*pi*i...} direction, backward the unnormalized e^{+2*pi*i...} one.
// Plans are created once per instance with deterministic planning.
class FourierTransform {
 public:
  FourierTransform(int dims, std::size_t samples_per_axis);
  ~FourierTransform();
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  int dims() const noexcept { return dims_; }
  std::size_t samples_per_axis() const noexcept { return m_; }
  std::span<std::complex<double>> buffer() noexcept;
  void zero_buffer() noexcept;
  void execute_forward();
  void execute_backward();

 private:
  int dims_;
  std::size_t m_;
  std::size_t total_;
  void* buf_;        // fftw_complex*
  void* plan_fwd_;   // fftw_plan
  void* plan_bwd_;   // fftw_plan
};

// values[j] = sum_m coeff(m) * exp(2*pi*i*<m, j>/M). Requires M >= range
// width on every axis so distinct frequencies land in distinct bins.
GridSignal evaluate_on_grid(const TrigPoly& f, std::size_t samples_per_axis);

// Inverse of evaluate_on_grid over the requested coefficient box. Requires
// the box width to fit below the grid's aliasing limit on every axis.
TrigPoly coefficients_from_grid(const GridSignal& g,
                                std::vector<FrequencyRange> ranges);

// Smallest power of two >= oversample * (2 * max_abs_freq + 2).
std::size_t admissible_grid(const TrigPoly& f, int oversample = 2);

// Dyadic block k: k = 0 is {0}; k >= 1 is [2^(k-1), 2^k - 1]; k <= -1 mirrors
// it on the negative axis, [-(2^|k| - 1), -2^(|k|-1)].
FrequencyRange block_range(int k);

// Index of the block containing a frequency (inverse of block_range).
int block_index_of(std::int64_t freq) noexcept;

// Restriction to dyadic block k along one axis; other axes untouched.
TrigPoly delta_block_axis(const TrigPoly& f, int axis, int k);

// One-dimensional block restriction.
TrigPoly delta_block(const TrigPoly& f, int k);

// Mixed block restriction, one index per axis.
TrigPoly delta_block_nd(const TrigPoly& f, std::span<const int> ks);

// (f (x) g)(x, y) = f(x) g(y); dimensions add and must stay <= 3.
TrigPoly tensor_product(const TrigPoly& f, const TrigPoly& g);

}  // namespace lpsquare
