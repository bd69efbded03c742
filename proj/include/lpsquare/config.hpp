#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpsquare {

enum class Suite {
  kBourgain,
  kMultiplierGrowth,
  kWeakSharpness,
  kCounterPeriodic,
  kCounterEuclidean,
  kAll,
};

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

// Scales each experiment family accepts (inclusive), matching the suite
// preconditions plus the grid cap.
std::pair<int, int> suite_scale_limits(Suite s);

struct RunConfig {
  Suite suite = Suite::kAll;
  int n_min = 0;  // 0 means unset
  int n_max = 0;
  int dim = 1;
  int oversample = 2;
  int breadth = 0;  // 0 derives the sign-pattern breadth from the kernel
  int trials = 16;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  bool write_csv = true;
  bool write_manifest = true;
};

// Command-line values; only fields the user actually passed are populated,
// so they can override a config file.
struct ConfigOverrides {
  std::optional<std::string> suite;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> dim;
  std::optional<int> oversample;
  std::optional<int> breadth;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> formats;  // comma-separated: "csv,json"
};

// Defaults, then the config file (JSON, keys named like the long flags),
// then the explicit flags. Throws std::invalid_argument on unknown keys,
// unknown suite names, malformed formats, or a range/seed violation.
RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const ConfigOverrides& flags);

// The checks resolve_config ends with, callable on a hand-built config.
void validate_run_config(const RunConfig& cfg);

// The inclusive scale list [n_min, n_max].
std::vector<int> config_scales(const RunConfig& cfg);

// The families a run covers, in fixed dispatch order.
std::vector<Suite> expand_suites(Suite s);

}  // namespace lpsquare
