#pragma once

#include <cstddef>
#include <span>

namespace lpsquare {

namespace detail {

// Pairwise (cascade) reduction. Error grows like log(n)*eps instead of n*eps,
// and the association order is a pure function of n, so reruns are bit-stable.
template <class F>
double pairwise_sum_impl(std::size_t lo, std::size_t hi, F& term) {
  const std::size_t n = hi - lo;
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum_impl(lo, mid, term) + pairwise_sum_impl(mid, hi, term);
}

}  // namespace detail

template <class F>
double pairwise_sum(std::size_t n, F term) {
  if (n == 0) return 0.0;
  return detail::pairwise_sum_impl<F>(0, n, term);
}

inline double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum(xs.size(), [&](std::size_t i) { return xs[i]; });
}

}  // namespace lpsquare
