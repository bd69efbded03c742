#pragma once

// Empirical constants frozen from a calibration run (tools/calibrate).
// The implicit constants in the inequalities these guard are not knowable
// a priori; stability across the scale family is the testable content.
// Each value folds in 10% slack relative to the measured extreme, so
// downstream assertions compare against them directly.

namespace lpsquare::calibration {

// Floor for min_{2<=k<=N} ||Delta_k(V)||_1 / k on the scale-kernel family,
// N in [4, 14]. Measured minimum 0.3307 (attained at N = 14, decreasing).
inline constexpr double kBlockRatioFloor = 0.2976;

// Cap for ||S(V)||_{1,inf} / (1 + entropy_{1/2}(V)) across the family.
// Measured range [0.6330, 0.6690].
inline constexpr double kSharpnessHalfCap = 0.7359;

// Cap for ||S(f)||_{1,inf} / (1 + ||f||_{LlogL^{1/2}}), scale kernels and
// random trigonometric polynomials both. Measured max 0.8146.
inline constexpr double kWeakTypeHalfCap = 0.8960;

// Two-sided bracket for (1 + entropy_{1/2}(V)) / (1 + ||V||_{LlogL^{1/2}}).
// Measured range [0.8855, 0.9479].
inline constexpr double kOrliczEquivLo = 0.7970;
inline constexpr double kOrliczEquivHi = 1.0427;

}  // namespace lpsquare::calibration
