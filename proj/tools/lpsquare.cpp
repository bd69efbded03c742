#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lpsquare/config.hpp"
#include "lpsquare/report.hpp"

namespace {

// CLI11 reports parse problems with its own exit codes; the tool's contract
// is 1 for every usage or config error.
int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dyadic square-function experiments on the torus: growth-exponent "
      "suites, weak-type sharpness checks, and counterexample bounds."};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run experiment suites");
  std::string suite = "all";
  std::string config_path;
  std::string out_dir;
  std::string formats;
  int n_min = 0, n_max = 0, dim = 0, oversample = 0, breadth = 0, trials = 0;
  std::uint64_t seed = 0;
  run->add_option("--suite", suite,
                  "bourgain | multiplier-growth | weak-sharpness | "
                  "counter-periodic | counter-euclidean | all");
  run->add_option("--config", config_path, "JSON config file; flags override");
  auto* o_nmin = run->add_option("--n-min", n_min, "smallest scale N");
  auto* o_nmax = run->add_option("--n-max", n_max, "largest scale N");
  auto* o_dim = run->add_option("--dim", dim, "parameters (1 or 2)");
  auto* o_os = run->add_option("--oversample", oversample,
                               "grid oversampling factor (default 2)");
  auto* o_breadth = run->add_option(
      "--breadth", breadth, "sign-pattern breadth K (default: from kernel)");
  auto* o_trials =
      run->add_option("--trials", trials, "random patterns per scale");
  auto* o_seed = run->add_option("--seed", seed, "master seed");
  auto* o_out = run->add_option("--out", out_dir, "output directory");
  auto* o_formats =
      run->add_option("--formats", formats, "comma list of csv,json");

  auto* verify = app.add_subcommand("verify", "re-check a run manifest");
  std::string manifest_path;
  verify->add_option("--manifest", manifest_path, "manifest.json from a run")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      lpsquare::ConfigOverrides flags;
      if (run->count("--suite") > 0) flags.suite = suite;
      if (o_nmin->count() > 0) flags.n_min = n_min;
      if (o_nmax->count() > 0) flags.n_max = n_max;
      if (o_dim->count() > 0) flags.dim = dim;
      if (o_os->count() > 0) flags.oversample = oversample;
      if (o_breadth->count() > 0) flags.breadth = breadth;
      if (o_trials->count() > 0) flags.trials = trials;
      if (o_seed->count() > 0) flags.seed = seed;
      if (o_out->count() > 0) flags.out_dir = out_dir;
      if (o_formats->count() > 0) flags.formats = formats;
      std::optional<std::string> cfg_file;
      if (run->count("--config") > 0) cfg_file = config_path;

      const lpsquare::RunConfig cfg =
          lpsquare::resolve_config(cfg_file, flags);
      return lpsquare::run_and_emit(cfg);
    }
    return lpsquare::verify_manifest(manifest_path);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
