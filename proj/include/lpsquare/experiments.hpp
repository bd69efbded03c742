#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpsquare/fit.hpp"
#include "lpsquare/fourier.hpp"

namespace lpsquare {

// V_{2^N}: the de la Vallee Poussin kernel whose Fourier coefficients equal
// 1 exactly on [-2^N, 2^N] (top frequency 2^{N+1} - 1).
TrigPoly scale_kernel(int scale);

// Exponent coupled to the scale, p(N) = 1 + 1/(N ln 2); 1/(p-1) = N ln 2.
double coupled_p(int scale);

// Geometric grid of `count` points from lo to hi inclusive, count >= 2.
std::vector<double> geometric_grid(double lo, double hi, int count);

struct ExperimentRecord {
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, double>> values;

  bool has(std::string_view name) const noexcept;
  // Looks up params first, then values. Throws on unknown names.
  double field(std::string_view name) const;
};

// A log-log fit of one record field against another across a suite's
// records. x_field/y_field name the source columns so the fit can be
// recomputed from stored records.
struct NamedFit {
  std::string name;
  std::string x_field;
  std::string y_field;
  ExponentFit fit;
};

// One checked inequality. `source` says how lhs is recomputed from stored
// records/fits when a manifest is re-verified:
//   "record:<i>:<field>"  that record's field
//   "fit:<name>"          slope of the named fit
//   "increase:<field>"    min consecutive difference of the field
// op is one of ">=", "<=", "in" (lo <= lhs <= hi), ">". Unused bounds are 0.
struct Assertion {
  std::string name;
  std::string source;
  std::string op;
  double lhs = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool pass = false;
};

// NaN-safe comparison; NaN never passes.
bool assertion_holds(std::string_view op, double lhs, double lo, double hi);

struct SuiteResult {
  std::string suite;
  // Stable CSV schema: fixed per suite, independent of the N range.
  std::vector<std::string> param_columns;
  std::vector<std::string> value_columns;
  std::vector<ExperimentRecord> records;
  std::vector<NamedFit> fits;
  std::vector<Assertion> assertions;
  bool quadrature_converged = true;
  double max_quadrature_delta = 0.0;

  bool all_pass() const noexcept;
};

struct SuiteOptions {
  int oversample = 2;
  int euclidean_x_points = 64;
  int breadth = 0;  // sign-pattern breadth; 0 derives it from the kernel
};

// L1 norms of the dyadic pieces of V_{2^N}, the square-function norms at
// p(N), and the ratio ||S V||_p / ||V||_p. Scales must be strictly
// increasing within [4, 14].
SuiteResult bourgain_lower_suite(std::span<const int> scales,
                                 const SuiteOptions& opt = {});

// Max over random sign patterns of ||T_w V||_p / ||V||_p at p(N).
SuiteResult multiplier_growth_suite(std::span<const int> scales, int trials,
                                    std::uint64_t seed,
                                    const SuiteOptions& opt = {});

// Weak-L1 norm of S_n(V x ... x V) against the entropy functionals at the
// critical exponent a_n = 1/2 + 3(n-1)/2 and at a_n - 1/4. dim in {1, 2};
// dim 2 uses the separable shortcut S_2(V x V) = S(V) x S(V).
SuiteResult weak_type_sharpness_suite(std::span<const int> scales, int dim,
                                      const SuiteOptions& opt = {});

// One scale of the periodic counterexample: pointwise lower bound for
// x|Delta_N(a_N)(x)| on [8*2^{-(N-1)}, 2^{-8}], tensor weak norm of the
// separable surrogate, and validation of the atom itself.
ExperimentRecord counterexample_periodic_record(int scale,
                                                std::size_t samples);

SuiteResult counterexample_periodic_suite(std::span<const int> scales,
                                          const SuiteOptions& opt = {});

// One scale of the euclidean counterexample: quadrature values of the four
// explicit integrals behind P_N(a_N)(x) and their pointwise bounds.
ExperimentRecord counterexample_euclidean_record(int scale,
                                                 std::span<const double> xs,
                                                 double& max_delta,
                                                 bool& converged);

SuiteResult counterexample_euclidean_suite(std::span<const int> scales,
                                           const SuiteOptions& opt = {});

}  // namespace lpsquare
