#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace lpsquare {

// sin(pi*t) and cos(pi*t) with argument reduction at integers, so that e.g.
// sinpi(whole number) is exactly zero. Plain std::sin(pi * t) leaves an
// O(eps) residue that matters when a coefficient must vanish identically.
inline double sinpi(double t) noexcept {
  const double k = std::nearbyint(t);
  const double r = t - k;
  const double s = std::sin(std::numbers::pi * r);
  return (std::fmod(std::fabs(k), 2.0) == 0.0) ? s : -s;
}

inline double cospi(double t) noexcept {
  const double k = std::nearbyint(t);
  const double r = t - k;
  const double c = std::cos(std::numbers::pi * r);
  return (std::fmod(std::fabs(k), 2.0) == 0.0) ? c : -c;
}

// e^{i*pi*t}
inline std::complex<double> unit_phase(double t) noexcept {
  return {cospi(t), sinpi(t)};
}

}  // namespace lpsquare
