#include "lpsquare/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpsquare {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

Suite suite_from_name(const std::string& name) {
  if (name == "bourgain") return Suite::kBourgain;
  if (name == "multiplier-growth") return Suite::kMultiplierGrowth;
  if (name == "weak-sharpness") return Suite::kWeakSharpness;
  if (name == "counter-periodic") return Suite::kCounterPeriodic;
  if (name == "counter-euclidean") return Suite::kCounterEuclidean;
  if (name == "all") return Suite::kAll;
  fail("unknown suite '" + name +
       "' (expected bourgain, multiplier-growth, weak-sharpness, "
       "counter-periodic, counter-euclidean, or all)");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kBourgain: return "bourgain";
    case Suite::kMultiplierGrowth: return "multiplier-growth";
    case Suite::kWeakSharpness: return "weak-sharpness";
    case Suite::kCounterPeriodic: return "counter-periodic";
    case Suite::kCounterEuclidean: return "counter-euclidean";
    case Suite::kAll: return "all";
  }
  fail("bad suite enum");
}

std::pair<int, int> suite_scale_limits(Suite s) {
  switch (s) {
    case Suite::kBourgain: return {4, 14};
    case Suite::kMultiplierGrowth: return {4, 14};
    case Suite::kWeakSharpness: return {4, 19};
    // The periodic family needs a grid of 2^{N+2} points, so the 2^22 grid
    // cap stops it at N = 20 even though the atom itself goes further.
    case Suite::kCounterPeriodic: return {10, 20};
    case Suite::kCounterEuclidean: return {10, 20};
    case Suite::kAll: break;
  }
  // "all" must satisfy every family at once.
  return {10, 14};
}

std::vector<Suite> expand_suites(Suite s) {
  if (s != Suite::kAll) return {s};
  return {Suite::kBourgain, Suite::kMultiplierGrowth, Suite::kWeakSharpness,
          Suite::kCounterPeriodic, Suite::kCounterEuclidean};
}

namespace {

void apply_formats(RunConfig& cfg, const std::string& formats) {
  cfg.write_csv = false;
  cfg.write_manifest = false;
  std::stringstream ss(formats);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    if (tok == "csv") {
      cfg.write_csv = true;
    } else if (tok == "json") {
      cfg.write_manifest = true;
    } else {
      fail("unknown output format '" + tok + "' (expected csv and/or json)");
    }
    any = true;
  }
  if (!any) fail("empty --formats list");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) fail("config file " + path + " must hold a JSON object");

  for (const auto& [key, val] : j.items()) {
    try {
      if (key == "suite") {
        cfg.suite = suite_from_name(val.get<std::string>());
      } else if (key == "n-min") {
        cfg.n_min = val.get<int>();
      } else if (key == "n-max") {
        cfg.n_max = val.get<int>();
      } else if (key == "dim") {
        cfg.dim = val.get<int>();
      } else if (key == "oversample") {
        cfg.oversample = val.get<int>();
      } else if (key == "breadth") {
        cfg.breadth = val.get<int>();
      } else if (key == "trials") {
        cfg.trials = val.get<int>();
      } else if (key == "seed") {
        cfg.seed = val.get<std::uint64_t>();
      } else if (key == "out") {
        cfg.out_dir = val.get<std::string>();
      } else if (key == "formats") {
        if (val.is_array()) {
          std::string joined;
          for (const auto& item : val) {
            if (!joined.empty()) joined += ',';
            joined += item.get<std::string>();
          }
          apply_formats(cfg, joined);
        } else {
          apply_formats(cfg, val.get<std::string>());
        }
      } else {
        fail("config file " + path + ": unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      fail("config file " + path + ", key '" + key + "': " + e.what());
    }
  }
}

}  // namespace

void validate_run_config(const RunConfig& cfg) {
  if (cfg.n_min == 0 || cfg.n_max == 0) {
    fail("an N range is required (--n-min and --n-max, or a config file)");
  }
  if (cfg.n_min > cfg.n_max) {
    fail("no work: empty N range [" + std::to_string(cfg.n_min) + ", " +
         std::to_string(cfg.n_max) + "]");
  }
  const auto [lo, hi] = suite_scale_limits(cfg.suite);
  if (cfg.n_min < lo || cfg.n_max > hi) {
    fail("suite " + suite_name(cfg.suite) + " accepts N in [" +
         std::to_string(lo) + ", " + std::to_string(hi) + "], got [" +
         std::to_string(cfg.n_min) + ", " + std::to_string(cfg.n_max) + "]");
  }
  if (cfg.dim != 1 && cfg.dim != 2) {
    fail("dim must be 1 or 2, got " + std::to_string(cfg.dim));
  }
  if (cfg.oversample < 1 || cfg.oversample > 8) {
    fail("oversample must lie in [1, 8], got " +
         std::to_string(cfg.oversample));
  }
  if (cfg.breadth < 0 || cfg.breadth > 62) {
    fail("breadth must lie in [0, 62], got " + std::to_string(cfg.breadth));
  }
  if (cfg.trials < 1) {
    fail("trials must be >= 1, got " + std::to_string(cfg.trials));
  }
  const bool randomized =
      cfg.suite == Suite::kMultiplierGrowth || cfg.suite == Suite::kAll;
  if (randomized && !cfg.seed.has_value()) {
    fail("suite " + suite_name(cfg.suite) +
         " draws random sign patterns; --seed is required");
  }
  // A nonzero breadth must still cover every block of the widest kernel,
  // or the multiplier suite would reject the pattern at run time.
  if (cfg.breadth > 0 && randomized && cfg.breadth < cfg.n_max + 2) {
    fail("breadth " + std::to_string(cfg.breadth) +
         " does not cover the blocks of the N = " + std::to_string(cfg.n_max) +
         " kernel (needs >= " + std::to_string(cfg.n_max + 2) + ")");
  }
  if (!cfg.write_csv && !cfg.write_manifest) {
    fail("no output format selected");
  }
  if (cfg.out_dir.empty()) fail("output directory must be nonempty");
}

RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const ConfigOverrides& flags) {
  RunConfig cfg;
  if (config_path) apply_config_file(cfg, *config_path);
  if (flags.suite) cfg.suite = suite_from_name(*flags.suite);
  if (flags.n_min) cfg.n_min = *flags.n_min;
  if (flags.n_max) cfg.n_max = *flags.n_max;
  if (flags.dim) cfg.dim = *flags.dim;
  if (flags.oversample) cfg.oversample = *flags.oversample;
  if (flags.breadth) cfg.breadth = *flags.breadth;
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.out_dir) cfg.out_dir = *flags.out_dir;
  if (flags.formats) apply_formats(cfg, *flags.formats);
  validate_run_config(cfg);
  return cfg;
}

std::vector<int> config_scales(const RunConfig& cfg) {
  std::vector<int> out;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) out.push_back(n);
  return out;
}

}  // namespace lpsquare
