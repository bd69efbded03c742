#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpsquare/fourier.hpp"

namespace lpsquare {

// Decreasing rearrangement of |g| over its grid: values sorted descending,
// each representing one cell of measure 1/total_samples.
struct RearrangedProfile {
  std::size_t total_samples = 0;
  std::vector<double> values;
};

// Grid L^p norm, ((1/M^d) sum |g|^p)^(1/p), for any p > 0.
double lp_norm(const GridSignal& g, double p);

RearrangedProfile rearrange(const GridSignal& g);

// Weak-L1 quasinorm sup_t t * mu(|g| > t), evaluated exactly on the step
// profile as max_j values[j] * (j+1) / M.
double weak_l1(const RearrangedProfile& prof);

// Dual-flavoured weak functional: max over prefixes j of
// (M/(j+1)) * ((1/M) * sum_{i<=j} sqrt(values[i]))^2.
// Dominates weak_l1 and never exceeds 4 times it.
double weak_l1_dual(const RearrangedProfile& prof);

// Orlicz-style functional integral_0^1 profile(t) * (ln(1/t))^r dt, r > 0.
// Interior cells use an 8-node Gauss-Legendre weight; the cell touching
// t = 0 integrates (after t = e^{-u}) with a 32-node Gauss-Laguerre rule.
double llogr_norm(const RearrangedProfile& prof, double r);

// (1/M^d) * sum |g| * (ln(1 + |g|))^r, r > 0.
double entropy_functional(const GridSignal& g, double r);

// Weak-L1 quasinorm of the tensor profile a (x) b on the product grid:
// sup_t t * mu(a_i * b_j > t) / (M_a * M_b), taken over all M_a * M_b
// products. Exact: branch and bound over threshold intervals with two-pointer
// counting; agrees bit-for-bit with brute-force materialization.
double weak_l1_tensor(const RearrangedProfile& a, const RearrangedProfile& b);

}  // namespace lpsquare
