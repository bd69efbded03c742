#pragma once

#include <span>
#include <utility>
#include <vector>

namespace lpsquare {

// Least-squares power-law fit v = e^intercept * s^slope on log-log axes.
struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;                     // of ln v vs fitted line
  std::vector<std::pair<double, double>> points; // (ln s, ln v)
};

// Requires at least 3 points with s > 0 and v > 0.
ExponentFit fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace lpsquare
