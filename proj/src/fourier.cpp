#include "lpsquare/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace lpsquare {

namespace {

constexpr int kMaxDims = 3;

void check_dims(int dims) {
  if (dims < 1 || dims > kMaxDims)
    throw std::invalid_argument("dimension must be 1, 2 or 3, got " +
                                std::to_string(dims));
}

bool finite(std::complex<double> z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::size_t checked_total(std::span<const FrequencyRange> ranges) {
  std::size_t total = 1;
  for (const auto& r : ranges) {
    if (r.lo > r.hi) throw std::invalid_argument("frequency range has lo > hi");
    const auto w = static_cast<std::uint64_t>(r.width());
    if (w > (std::uint64_t{1} << 26) ||
        total > (std::size_t{1} << 26) / w)
      throw std::invalid_argument("coefficient box too large");
    total *= static_cast<std::size_t>(w);
  }
  return total;
}

}  // namespace

TrigPoly::TrigPoly(std::vector<FrequencyRange> ranges,
                   std::vector<std::complex<double>> coeffs)
    : ranges_(std::move(ranges)), coeffs_(std::move(coeffs)) {
  check_dims(static_cast<int>(ranges_.size()));
  const std::size_t total = checked_total(ranges_);
  if (coeffs_.size() != total)
    throw std::invalid_argument("coefficient count " +
                                std::to_string(coeffs_.size()) +
                                " does not match box size " +
                                std::to_string(total));
  for (const auto& c : coeffs_)
    if (!finite(c)) throw std::invalid_argument("non-finite coefficient");
  strides_.assign(ranges_.size(), 1);
  for (int a = static_cast<int>(ranges_.size()) - 2; a >= 0; --a)
    strides_[a] = strides_[a + 1] * static_cast<std::size_t>(ranges_[a + 1].width());
}

const FrequencyRange& TrigPoly::range(int axis) const {
  if (axis < 0 || axis >= dims())
    throw std::invalid_argument("axis out of range");
  return ranges_[static_cast<std::size_t>(axis)];
}

std::size_t TrigPoly::flat_index(std::span<const std::int64_t> freq) const {
  if (freq.size() != ranges_.size())
    throw std::invalid_argument("frequency arity does not match dimension");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < ranges_.size(); ++a) {
    if (!ranges_[a].contains(freq[a]))
      throw std::invalid_argument("frequency outside coefficient box");
    idx += strides_[a] * static_cast<std::size_t>(freq[a] - ranges_[a].lo);
  }
  return idx;
}

std::int64_t TrigPoly::freq_of(std::size_t flat, int axis) const {
  const auto a = static_cast<std::size_t>(axis);
  const auto w = static_cast<std::size_t>(ranges_[a].width());
  return ranges_[a].lo + static_cast<std::int64_t>((flat / strides_[a]) % w);
}

std::complex<double> TrigPoly::coeff(std::span<const std::int64_t> freq) const {
  return coeffs_[flat_index(freq)];
}

std::complex<double> TrigPoly::coeff(
    std::initializer_list<std::int64_t> freq) const {
  return coeff(std::span<const std::int64_t>(freq.begin(), freq.size()));
}

std::int64_t TrigPoly::max_abs_freq() const noexcept {
  std::int64_t m = 0;
  for (const auto& r : ranges_)
    m = std::max({m, std::abs(r.lo), std::abs(r.hi)});
  return m;
}

GridSignal::GridSignal(int dims, std::size_t samples_per_axis,
                       std::vector<std::complex<double>> values)
    : dims_(dims), m_(samples_per_axis), values_(std::move(values)) {
  check_dims(dims_);
  if (m_ == 0) throw std::invalid_argument("grid size must be positive");
  std::size_t total = 1;
  for (int a = 0; a < dims_; ++a) {
    if (total > (std::size_t{1} << 48) / m_)
      throw std::invalid_argument("grid too large");
    total *= m_;
  }
  if (values_.size() != total)
    throw std::invalid_argument("sample count does not match grid size");
  for (const auto& v : values_)
    if (!finite(v)) throw std::invalid_argument("non-finite sample");
}

FourierTransform::FourierTransform(int dims, std::size_t samples_per_axis)
    : dims_(dims), m_(samples_per_axis) {
  check_dims(dims_);
  if (m_ == 0 || m_ > (std::size_t{1} << 26))
    throw std::invalid_argument("unsupported transform size");
  total_ = 1;
  for (int a = 0; a < dims_; ++a) total_ *= m_;
  if (dims_ > 1 && total_ > (std::size_t{1} << 26))
    throw std::invalid_argument("unsupported transform size");

  buf_ = fftw_malloc(sizeof(fftw_complex) * total_);
  if (buf_ == nullptr) throw std::runtime_error("transform buffer allocation failed");
  int n[kMaxDims];
  for (int a = 0; a < dims_; ++a) n[a] = static_cast<int>(m_);
  auto* b = static_cast<fftw_complex*>(buf_);
  plan_fwd_ = fftw_plan_dft(dims_, n, b, b, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft(dims_, n, b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (plan_fwd_ == nullptr || plan_bwd_ == nullptr) {
    fftw_free(buf_);
    throw std::runtime_error("transform planning failed");
  }
}

FourierTransform::~FourierTransform() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

std::span<std::complex<double>> FourierTransform::buffer() noexcept {
  return {static_cast<std::complex<double>*>(buf_), total_};
}

void FourierTransform::zero_buffer() noexcept {
  std::memset(buf_, 0, sizeof(fftw_complex) * total_);
}

void FourierTransform::execute_forward() {
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
}

void FourierTransform::execute_backward() {
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
}

namespace {

// Scatters coefficients into DFT bins (frequency mod M per axis). The caller
// guarantees M >= width on every axis, so bins never collide.
void scatter_coeffs(const TrigPoly& f, std::size_t m,
                    std::span<std::complex<double>> buf) {
  const int d = f.dims();
  const auto mm = static_cast<std::int64_t>(m);
  const auto coeffs = f.coeffs();
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
    std::size_t bin = 0;
    for (int a = 0; a < d; ++a) {
      const std::int64_t mf = ((f.freq_of(flat, a) % mm) + mm) % mm;
      bin = bin * m + static_cast<std::size_t>(mf);
    }
    buf[bin] = coeffs[flat];
  }
}

}  // namespace

GridSignal evaluate_on_grid(const TrigPoly& f, std::size_t samples_per_axis) {
  for (int a = 0; a < f.dims(); ++a)
    if (static_cast<std::int64_t>(samples_per_axis) < f.range(a).width())
      throw std::invalid_argument(
          "grid too small for the coefficient box; increase samples_per_axis");
  FourierTransform ft(f.dims(), samples_per_axis);
  ft.zero_buffer();
  scatter_coeffs(f, samples_per_axis, ft.buffer());
  ft.execute_backward();
  const auto buf = ft.buffer();
  return GridSignal(f.dims(), samples_per_axis,
                    std::vector<std::complex<double>>(buf.begin(), buf.end()));
}

TrigPoly coefficients_from_grid(const GridSignal& g,
                                std::vector<FrequencyRange> ranges) {
  if (static_cast<int>(ranges.size()) != g.dims())
    throw std::invalid_argument("range arity does not match grid dimension");
  const std::size_t m = g.samples_per_axis();
  for (const auto& r : ranges) {
    if (r.lo > r.hi) throw std::invalid_argument("frequency range has lo > hi");
    if (r.width() > static_cast<std::int64_t>(m))
      throw std::invalid_argument(
          "requested frequencies exceed the grid's aliasing limit");
  }
  FourierTransform ft(g.dims(), m);
  std::copy(g.values().begin(), g.values().end(), ft.buffer().begin());
  ft.execute_forward();
  const auto buf = ft.buffer();
  const double scale = 1.0 / static_cast<double>(g.size());

  const std::size_t total = checked_total(ranges);
  std::vector<std::complex<double>> coeffs(total);
  TrigPoly out(std::move(ranges), std::move(coeffs));
  const auto mm = static_cast<std::int64_t>(m);
  auto dst = out.mutable_coeffs();
  for (std::size_t flat = 0; flat < dst.size(); ++flat) {
    std::size_t bin = 0;
    for (int a = 0; a < g.dims(); ++a) {
      const std::int64_t mf = ((out.freq_of(flat, a) % mm) + mm) % mm;
      bin = bin * m + static_cast<std::size_t>(mf);
    }
    dst[flat] = buf[bin] * scale;
  }
  return out;
}

std::size_t admissible_grid(const TrigPoly& f, int oversample) {
  if (oversample < 1) throw std::invalid_argument("oversample must be >= 1");
  const auto need = static_cast<std::uint64_t>(oversample) *
                    (2 * static_cast<std::uint64_t>(f.max_abs_freq()) + 2);
  return std::bit_ceil(std::max<std::uint64_t>(need, 1));
}

FrequencyRange block_range(int k) {
  if (std::abs(k) > 62) throw std::invalid_argument("block index out of range");
  if (k == 0) return {0, 0};
  if (k > 0)
    return {std::int64_t{1} << (k - 1), (std::int64_t{1} << k) - 1};
  const int a = -k;
  return {-((std::int64_t{1} << a) - 1), -(std::int64_t{1} << (a - 1))};
}

int block_index_of(std::int64_t freq) noexcept {
  if (freq == 0) return 0;
  const auto w = std::bit_width(static_cast<std::uint64_t>(std::abs(freq)));
  return freq > 0 ? static_cast<int>(w) : -static_cast<int>(w);
}

TrigPoly delta_block_axis(const TrigPoly& f, int axis, int k) {
  if (axis < 0 || axis >= f.dims())
    throw std::invalid_argument("axis out of range");
  const FrequencyRange blk = block_range(k);
  std::vector<std::complex<double>> coeffs(f.coeffs().begin(),
                                           f.coeffs().end());
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat)
    if (!blk.contains(f.freq_of(flat, axis))) coeffs[flat] = 0.0;
  return TrigPoly(f.ranges(), std::move(coeffs));
}

TrigPoly delta_block(const TrigPoly& f, int k) {
  if (f.dims() != 1)
    throw std::invalid_argument("delta_block expects a one-dimensional input");
  return delta_block_axis(f, 0, k);
}

TrigPoly delta_block_nd(const TrigPoly& f, std::span<const int> ks) {
  if (static_cast<int>(ks.size()) != f.dims())
    throw std::invalid_argument("block arity does not match dimension");
  FrequencyRange blk[kMaxDims];
  for (std::size_t a = 0; a < ks.size(); ++a) blk[a] = block_range(ks[a]);
  std::vector<std::complex<double>> coeffs(f.coeffs().begin(),
                                           f.coeffs().end());
  for (std::size_t flat = 0; flat < coeffs.size(); ++flat)
    for (int a = 0; a < f.dims(); ++a)
      if (!blk[a].contains(f.freq_of(flat, a))) {
        coeffs[flat] = 0.0;
        break;
      }
  return TrigPoly(f.ranges(), std::move(coeffs));
}

TrigPoly tensor_product(const TrigPoly& f, const TrigPoly& g) {
  if (f.dims() + g.dims() > kMaxDims)
    throw std::invalid_argument("tensor product exceeds three dimensions");
  std::vector<FrequencyRange> ranges(f.ranges());
  ranges.insert(ranges.end(), g.ranges().begin(), g.ranges().end());
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(f.coeff_count() * g.coeff_count());
  for (const auto& cf : f.coeffs())
    for (const auto& cg : g.coeffs()) coeffs.push_back(cf * cg);
  return TrigPoly(std::move(ranges), std::move(coeffs));
}

}  // namespace lpsquare
