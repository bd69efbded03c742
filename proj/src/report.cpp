#include "lpsquare/report.hpp"

#include <fftw3.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "lpsquare/fit.hpp"

namespace lpsquare {

namespace {

constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double json_number(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

bool same_value(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

std::string fmt_bound(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string describe(const Assertion& a) {
  std::string s = a.name + " (" + a.source + "): got " + fmt17(a.lhs) +
                  ", want ";
  if (a.op == "in") {
    s += "in [" + fmt_bound(a.lo) + ", " + fmt_bound(a.hi) + "]";
  } else if (a.op == "<=") {
    s += "<= " + fmt_bound(a.hi);
  } else {
    s += a.op + " " + fmt_bound(a.lo);
  }
  return s;
}

}  // namespace

std::string csv_text(const SuiteResult& r) {
  std::string out;
  bool first = true;
  const auto put = [&](const std::string& cell) {
    if (!first) out += ',';
    out += cell;
    first = false;
  };
  for (const auto& c : r.param_columns) put(c);
  for (const auto& c : r.value_columns) put(c);
  for (const auto& f : r.fits) {
    put("slope_" + f.name);
    put("intercept_" + f.name);
  }
  out += '\n';
  for (const auto& rec : r.records) {
    first = true;
    for (const auto& [name, v] : rec.params) put(fmt17(v));
    for (const auto& [name, v] : rec.values) put(fmt17(v));
    for (const auto& f : r.fits) {
      put(fmt17(f.fit.slope));
      put(fmt17(f.fit.intercept));
    }
    out += '\n';
  }
  return out;
}

std::string manifest_text(const RunConfig& cfg,
                          const std::vector<SuiteResult>& results,
                          double wall_seconds) {
  Json root;
  root["tool"] = "lpsquare";
  root["version"] = kToolVersion;
  root["fftw"] = std::string(fftw_version);
  root["wall_seconds"] = wall_seconds;

  Json jcfg;
  jcfg["suite"] = suite_name(cfg.suite);
  jcfg["n-min"] = cfg.n_min;
  jcfg["n-max"] = cfg.n_max;
  jcfg["dim"] = cfg.dim;
  jcfg["oversample"] = cfg.oversample;
  jcfg["breadth"] = cfg.breadth;
  jcfg["trials"] = cfg.trials;
  if (cfg.seed) {
    jcfg["seed"] = *cfg.seed;
  } else {
    jcfg["seed"] = nullptr;
  }
  jcfg["out"] = cfg.out_dir;
  Json fmts = Json::array();
  if (cfg.write_csv) fmts.push_back("csv");
  if (cfg.write_manifest) fmts.push_back("json");
  jcfg["formats"] = fmts;
  root["config"] = jcfg;

  bool all_pass = true;
  Json jsuites = Json::array();
  for (const auto& r : results) {
    Json js;
    js["suite"] = r.suite;
    js["param_columns"] = r.param_columns;
    js["value_columns"] = r.value_columns;
    Json jrecs = Json::array();
    for (const auto& rec : r.records) {
      Json jr;
      for (const auto& [name, v] : rec.params) jr[name] = v;
      for (const auto& [name, v] : rec.values) jr[name] = v;
      jrecs.push_back(std::move(jr));
    }
    js["records"] = std::move(jrecs);
    Json jfits = Json::array();
    for (const auto& f : r.fits) {
      Json jf;
      jf["name"] = f.name;
      jf["x_field"] = f.x_field;
      jf["y_field"] = f.y_field;
      jf["slope"] = f.fit.slope;
      jf["intercept"] = f.fit.intercept;
      jf["max_residual"] = f.fit.max_residual;
      Json pts = Json::array();
      for (const auto& [x, y] : f.fit.points) pts.push_back(Json::array({x, y}));
      jf["log_points"] = std::move(pts);
      jfits.push_back(std::move(jf));
    }
    js["fits"] = std::move(jfits);
    Json jasserts = Json::array();
    for (const auto& a : r.assertions) {
      Json ja;
      ja["name"] = a.name;
      ja["source"] = a.source;
      ja["op"] = a.op;
      ja["lhs"] = a.lhs;
      ja["lo"] = a.lo;
      ja["hi"] = a.hi;
      ja["pass"] = a.pass;
      jasserts.push_back(std::move(ja));
      all_pass = all_pass && a.pass;
    }
    js["assertions"] = std::move(jasserts);
    js["quadrature_converged"] = r.quadrature_converged;
    js["max_quadrature_delta"] = r.max_quadrature_delta;
    jsuites.push_back(std::move(js));
  }
  root["suites"] = std::move(jsuites);
  root["all_pass"] = all_pass;
  return root.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("short write to " + path.string());
}

SuiteResult dispatch(Suite s, const RunConfig& cfg) {
  const std::vector<int> scales = config_scales(cfg);
  SuiteOptions opt;
  opt.oversample = cfg.oversample;
  opt.breadth = cfg.breadth;
  switch (s) {
    case Suite::kBourgain:
      return bourgain_lower_suite(scales, opt);
    case Suite::kMultiplierGrowth:
      return multiplier_growth_suite(scales, cfg.trials, *cfg.seed, opt);
    case Suite::kWeakSharpness:
      return weak_type_sharpness_suite(scales, cfg.dim, opt);
    case Suite::kCounterPeriodic:
      return counterexample_periodic_suite(scales, opt);
    case Suite::kCounterEuclidean:
      return counterexample_euclidean_suite(scales, opt);
    case Suite::kAll: break;
  }
  throw std::logic_error("dispatch on 'all'");
}

}  // namespace

int run_and_emit(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  for (Suite s : expand_suites(cfg.suite)) {
    results.push_back(dispatch(s, cfg));
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::filesystem::create_directories(cfg.out_dir);
  const std::filesystem::path dir(cfg.out_dir);

  bool all_pass = true;
  bool converged = true;
  for (const auto& r : results) {
    std::size_t passed = 0;
    for (const auto& a : r.assertions) passed += a.pass ? 1 : 0;
    std::cout << "[" << r.suite << "] records=" << r.records.size()
              << " fits=" << r.fits.size() << " assertions=" << passed << "/"
              << r.assertions.size() << "\n";
    for (const auto& a : r.assertions) {
      if (!a.pass) std::cout << "  FAIL " << describe(a) << "\n";
    }
    if (!r.quadrature_converged) {
      std::cout << "  quadrature did not converge (max delta "
                << fmt17(r.max_quadrature_delta) << ")\n";
    }
    all_pass = all_pass && r.all_pass();
    converged = converged && r.quadrature_converged;

    if (cfg.write_csv) {
      const auto path = dir / (r.suite + ".csv");
      write_file(path, csv_text(r));
      std::cout << "wrote " << path.string() << "\n";
    }
  }
  if (cfg.write_manifest) {
    const auto path = dir / "manifest.json";
    write_file(path, manifest_text(cfg, results, wall));
    std::cout << "wrote " << path.string() << "\n";
  }
  if (!converged) return 3;
  return all_pass ? 0 : 2;
}

namespace {

// Rebuilds the lhs of a stored assertion from the manifest's own records,
// mirroring how the suite computed it in the first place.
double recompute_lhs(const Json& suite, const std::string& source,
                     std::string* error) {
  const auto& records = suite.at("records");
  if (source.rfind("record:", 0) == 0) {
    const auto colon = source.find(':', 7);
    if (colon == std::string::npos) {
      *error = "bad record source";
      return 0.0;
    }
    const std::size_t idx = std::stoul(source.substr(7, colon - 7));
    const std::string field = source.substr(colon + 1);
    if (idx >= records.size()) {
      *error = "record index out of range";
      return 0.0;
    }
    return json_number(records.at(idx).at(field));
  }
  if (source.rfind("fit:", 0) == 0) {
    const std::string name = source.substr(4);
    for (const auto& jf : suite.at("fits")) {
      if (jf.at("name") != name) continue;
      std::vector<std::pair<double, double>> pts;
      for (const auto& jr : records) {
        pts.emplace_back(json_number(jr.at(jf.at("x_field"))),
                         json_number(jr.at(jf.at("y_field"))));
      }
      const ExponentFit refit = fit_exponent(pts);
      if (!same_value(refit.slope, jf.at("slope").get<double>())) {
        *error = "stored slope " + fmt17(jf.at("slope").get<double>()) +
                 " != refit " + fmt17(refit.slope);
      }
      return refit.slope;
    }
    *error = "fit '" + name + "' not found";
    return 0.0;
  }
  if (source.rfind("increase:", 0) == 0) {
    const std::string field = source.substr(9);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < records.size(); ++i) {
      worst = std::min(worst, json_number(records.at(i).at(field)) -
                                  json_number(records.at(i - 1).at(field)));
    }
    return worst;
  }
  *error = "unknown source '" + source + "'";
  return 0.0;
}

}  // namespace

int verify_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  Json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("manifest " + path + ": " + e.what());
  }

  std::size_t checked = 0;
  std::size_t failed = 0;
  try {
    for (const auto& suite : root.at("suites")) {
      for (const auto& ja : suite.at("assertions")) {
        ++checked;
        Assertion a;
        a.name = ja.at("name").get<std::string>();
        a.source = ja.at("source").get<std::string>();
        a.op = ja.at("op").get<std::string>();
        a.lhs = json_number(ja.at("lhs"));
        a.lo = json_number(ja.at("lo"));
        a.hi = json_number(ja.at("hi"));
        a.pass = ja.at("pass").get<bool>();

        std::string error;
        const double lhs = recompute_lhs(suite, a.source, &error);
        bool ok = error.empty();
        if (ok && !same_value(lhs, a.lhs)) {
          error = "stored lhs " + fmt17(a.lhs) + " != recomputed " + fmt17(lhs);
          ok = false;
        }
        bool pass = false;
        if (ok) {
          pass = assertion_holds(a.op, lhs, a.lo, a.hi);
          if (pass != a.pass) {
            error = std::string("stored pass=") + (a.pass ? "true" : "false") +
                    " but recomputed " + (pass ? "true" : "false");
            ok = false;
          }
        }
        if (!ok) {
          ++failed;
          std::cout << "MISMATCH " << suite.at("suite").get<std::string>()
                    << "/" << a.name << ": " << error << "\n";
        } else if (!pass) {
          ++failed;
          std::cout << "FAIL " << suite.at("suite").get<std::string>() << "/"
                    << describe(a) << "\n";
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("manifest " + path + ": " + e.what());
  }
  std::cout << "verified " << checked << " assertions, " << failed
            << " failing\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace lpsquare
