#include "lpsquare/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace lpsquare {

ExponentFit fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("exponent fit needs at least 3 points");
  ExponentFit fit;
  fit.points.reserve(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [s, v] : points) {
    if (!(s > 0.0) || !(v > 0.0) || !std::isfinite(s) || !std::isfinite(v))
      throw std::invalid_argument("fit data must be positive and finite");
    fit.points.emplace_back(std::log(s), std::log(v));
    sx += fit.points.back().first;
    sy += fit.points.back().second;
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : fit.points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit scales are all equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (const auto& [x, y] : fit.points)
    fit.max_residual = std::max(
        fit.max_residual, std::fabs(y - (fit.intercept + fit.slope * x)));
  return fit;
}

}  // namespace lpsquare
