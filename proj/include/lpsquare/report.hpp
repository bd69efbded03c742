#pragma once

#include <string>
#include <vector>

#include "lpsquare/config.hpp"
#include "lpsquare/experiments.hpp"

namespace lpsquare {

// CSV for one suite: a header row, then one row per record. Column order is
// parameters, measurements, then slope/intercept per fit (repeated on every
// row, so the schema depends only on the suite). Doubles print with %.17g,
// which makes reruns byte-comparable.
std::string csv_text(const SuiteResult& r);

// The run manifest as RFC 8259 text: resolved config echo, library
// versions, wall time, and per suite the full records, fits, and assertion
// outcomes. NaN serializes as null.
std::string manifest_text(const RunConfig& cfg,
                          const std::vector<SuiteResult>& results,
                          double wall_seconds);

// Runs the configured families, writes <suite>.csv and manifest.json under
// cfg.out_dir, and prints a short summary with every failing assertion.
// Returns the process exit code: 0 all assertions pass, 2 an assertion
// failed, 3 a quadrature did not converge. Throws std::runtime_error when
// a file cannot be written.
int run_and_emit(const RunConfig& cfg);

// Reloads a manifest, recomputes each assertion from the stored records
// (and refits the stored fit inputs), and compares against the recorded
// outcome. Returns 0 when everything passes and agrees, 2 otherwise.
// Throws std::runtime_error when the file is missing or malformed.
int verify_manifest(const std::string& path);

}  // namespace lpsquare
