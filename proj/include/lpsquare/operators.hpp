#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpsquare/fourier.hpp"

namespace lpsquare {

// Choice of sign for every dyadic block index in [-K, K].
class SignPattern {
 public:
  SignPattern(int breadth, std::vector<std::int8_t> signs);

  static SignPattern all_plus(int breadth);
  static SignPattern from_seed(int breadth, std::uint64_t seed);

  int breadth() const noexcept { return breadth_; }
  int sign(int block) const;
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }
  SignPattern flipped() const;  // global flip epsilon -> -epsilon

 private:
  int breadth_;
  std::vector<std::int8_t> signs_;  // index block + breadth
};

// Smallest breadth whose blocks cover every frequency of f:
// ceil(log2(degree)) + 1, and 1 for (near-)constant inputs.
int default_breadth(const TrigPoly& f);

// Dyadic square function (sum_k |Delta_k f|^2)^(1/2) sampled on the grid;
// one-dimensional input. Values are real and nonnegative.
GridSignal square_function(const TrigPoly& f, std::size_t samples_per_axis);

// Product-form square function over block tuples (one index per axis),
// for 2d and 3d inputs.
GridSignal square_function_nd(const TrigPoly& f, std::size_t samples_per_axis);

// Sign multiplier: coefficient at m scaled by the sign of its block.
// The pattern must cover every block meeting f's range.
TrigPoly t_omega(const TrigPoly& f, const SignPattern& signs);

// Tensor sign multiplier: product of per-axis block signs.
TrigPoly tensor_multiplier(const TrigPoly& f,
                           std::span<const SignPattern> per_axis);

// sqrt of the exact second moment of |T_omega f|(x) over all sign patterns
// on blocks -breadth..breadth (enumerated, not sampled). Equals the square
// function pointwise. Requires 2*breadth+1 <= 25.
GridSignal rademacher_average(const TrigPoly& f, std::size_t samples_per_axis,
                              int breadth);

// Exact first moment of |T_omega f|(x) over the same enumeration. Lies
// between square_function/sqrt(2) and square_function pointwise.
GridSignal rademacher_first_moment(const TrigPoly& f,
                                   std::size_t samples_per_axis, int breadth);

}  // namespace lpsquare
