// disksharp command line: compute sharp constants, sweep them over p for
// figure data, and run the numerical verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "disksharp/constants.hpp"
#include "disksharp/errors.hpp"
#include "disksharp/extremal.hpp"
#include "disksharp/verification.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

using nlohmann::json;

struct GlobalOptions {
  double tol = 1e-10;
};

double parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--p", "not a number or 'inf'");
  }
  if (pos != text.size()) throw CLI::ValidationError("--p", "not a number or 'inf'");
  return value;
}

bool quantity_needs_r(const std::string& quantity) {
  return quantity == "Cp_at_z" || quantity == "cp_at_r" || quantity == "directional";
}

void validate_quantity(const std::string& quantity, const std::optional<double>& r) {
  if (quantity != "Cp_global" && quantity != "cp_global" && !quantity_needs_r(quantity))
    throw CLI::ValidationError("--quantity", "unknown quantity " + quantity);
  if (quantity_needs_r(quantity) && !r)
    throw CLI::ValidationError("--r", "required for " + quantity);
}

std::string fmt10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// All emitted numerics carry 10 significant digits, JSON included.
double round10(double x) { return std::strtod(fmt10(x).c_str(), nullptr); }

const char* method_name(disksharp::Method m) {
  return m == disksharp::Method::Quadrature ? "quadrature" : "closed-form";
}

struct SweepSpec {
  std::string quantity;
  double p_min = 1.05;
  double p_max = 20.0;
  int steps = 100;
  std::optional<double> r;
  double alpha = 0.0;
  double tau = 0.0;
  std::string format = "csv";
  std::string out;
  int jobs = 1;
};

// Grid over p: linear in p for finite ranges; when p_max is infinite the
// grid is linear in the conjugate q instead (q = 1 is p = inf), which keeps
// the endpoint representable.
std::vector<double> make_p_grid(double p_min, double p_max, int steps) {
  std::vector<double> grid;
  grid.reserve(steps);
  if (std::isinf(p_max)) {
    const double q_max = p_min / (p_min - 1.0);
    for (int i = 0; i < steps; ++i) {
      const double q = q_max + (1.0 - q_max) * i / (steps - 1);
      grid.push_back(q <= 1.0 ? std::numeric_limits<double>::infinity() : q / (q - 1.0));
    }
  } else {
    for (int i = 0; i < steps; ++i)
      grid.push_back(p_min + (p_max - p_min) * i / (steps - 1));
  }
  return grid;
}

disksharp::ConstantReport compute_quantity(const std::string& quantity, double p,
                                           const std::optional<double>& r, double alpha,
                                           double tau, double tol) {
  using namespace disksharp;
  const Exponent e = Exponent::from_p(p);
  if (quantity == "Cp_global") return global_constant(e, tol);
  if (quantity == "cp_global") return wirtinger_constant_global(e);
  const auto need_r = [&]() -> double {
    if (!r) throw CLI::ValidationError("--r", "required for " + quantity);
    return *r;
  };
  if (quantity == "Cp_at_z") return gradient_constant(e, DiskPoint(need_r(), alpha), tol);
  if (quantity == "cp_at_r") return wirtinger_constant(e, need_r(), tol);
  if (quantity == "directional")
    return directional_constant(e, DiskPoint(need_r(), alpha), Direction(tau), tol);
  throw CLI::ValidationError("--quantity", "unknown quantity " + quantity);
}

int run_sweep(const SweepSpec& spec, const GlobalOptions& global) {
  validate_quantity(spec.quantity, spec.r);  // usage errors before any cell runs
  const std::vector<double> grid = make_p_grid(spec.p_min, spec.p_max, spec.steps);
  std::vector<disksharp::ConstantReport> results(grid.size());
  std::vector<std::string> failures(grid.size());

  const int jobs = std::max(1, spec.jobs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        results[i] = compute_quantity(spec.quantity, grid[i], spec.r, spec.alpha, spec.tau,
                                      global.tol);
      } catch (const std::exception& err) {
        failures[i] = err.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!failures[i].empty()) {
      std::cerr << "sweep cell p=" << fmt10(grid[i]) << " failed: " << failures[i] << "\n";
      return 3;  // partial output suppressed
    }
  }

  std::string payload;
  if (spec.format == "csv") {
    std::ostringstream os;
    os << "p,value,method,error\r\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      os << fmt10(grid[i]) << ',' << fmt10(results[i].value) << ',' << method_name(results[i].method)
         << ',' << fmt10(results[i].error_estimate) << "\r\n";
    payload = os.str();
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      json row;
      if (std::isinf(grid[i]))
        row["p"] = "inf";
      else
        row["p"] = round10(grid[i]);
      row["value"] = round10(results[i].value);
      row["method"] = method_name(results[i].method);
      row["error"] = round10(results[i].error_estimate);
      rows.push_back(std::move(row));
    }
    payload = rows.dump(2);
    payload += '\n';
  }

  if (spec.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(spec.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open output file: " << spec.out << "\n";
      return 2;
    }
    file << payload;
  }
  return 0;
}

// ---- verify suites -------------------------------------------------------

json cell_to_json(const disksharp::LemmaCell& cell) {
  json j;
  j["pass"] = cell.pass;
  j["margin"] = round10(cell.margin);
  if (!cell.note.empty()) j["note"] = cell.note;
  for (const auto& [key, value] : cell.params) j["params"][key] = round10(value);
  return j;
}

json report_to_json(const disksharp::LemmaReport& report) {
  json j;
  j["claim"] = report.claim;
  j["passed"] = report.passed();
  j["worst_margin"] = round10(report.worst_margin());
  j["cells"] = json::array();
  for (const auto& cell : report.cells) j["cells"].push_back(cell_to_json(cell));
  return j;
}

json run_lemmas_suite(double tol, bool& ok) {
  using namespace disksharp;
  json checks = json::array();
  const std::vector<double> q_grid{1.0, 1.2, 1.5, 2.0, 2.5, 3.0, 5.0};
  const std::vector<double> r_grid{0.0, 0.3, 0.6, 0.9, 0.99};
  for (double q : q_grid) {
    for (double r : r_grid) {
      const LemmaReport rep = directional_extrema_check(q, r, tol);
      ok = ok && rep.passed();
      json c = report_to_json(rep);
      c["name"] = "directional_extrema q=" + fmt10(q) + " r=" + fmt10(r);
      checks.push_back(std::move(c));
    }
    for (double lambda : {0.0, 1.0, q}) {
      for (double t : {0.0, 1.1, kPi / 2.0}) {
        const LemmaReport rep = boundary_dominance_check(lambda, q, t, tol);
        ok = ok && rep.passed();
        json c = report_to_json(rep);
        c["name"] = "boundary_dominance q=" + fmt10(q) + " lambda=" + fmt10(lambda) + " t=" + fmt10(t);
        checks.push_back(std::move(c));
      }
    }
  }
  return checks;
}

json run_crossover_suite(double tol, bool& ok) {
  using namespace disksharp;
  json checks = json::array();
  for (double r : {0.3, 0.5, 0.9}) {
    const CrossoverResult result = khavinson_crossover(r, 1e-4, tol);
    const bool pass = result.found && std::abs(result.p_star - 2.0) <= 1e-3;
    ok = ok && pass;
    json c;
    c["name"] = "khavinson_crossover r=" + fmt10(r);
    c["passed"] = pass;
    c["p_star"] = round10(result.found ? result.p_star : 0.0);
    c["degenerate"] = result.degenerate;
    checks.push_back(std::move(c));
  }
  return checks;
}

json run_prudnikov_suite(std::uint64_t seed, double tol, bool& ok) {
  using namespace disksharp;
  json checks = json::array();
  const auto push = [&](const LemmaReport& rep, const std::string& name) {
    ok = ok && rep.passed();
    json c = report_to_json(rep);
    c["name"] = name;
    checks.push_back(std::move(c));
  };
  push(prudnikov_check(1.0, 0.0, 0.4, tol), "prudnikov mu=1 nu=0");
  push(prudnikov_check(3.0, -1.0, 0.5, tol), "prudnikov mu=q+1 nu=1-q, q=2");
  push(prudnikov_check(1.0, -0.7, 0.8, tol), "prudnikov mu=1 nu=1-q, q=1.7");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double mu = 0.7 + 3.3 * u(rng);
    const double nu = -2.5 + 4.0 * u(rng);
    const double r = 0.9 * u(rng);
    push(prudnikov_check(mu, nu, r, tol),
         "prudnikov random mu=" + fmt10(mu) + " nu=" + fmt10(nu) + " r=" + fmt10(r));
  }
  return checks;
}

json run_sharpness_suite(const std::vector<double>& ps, double tol, bool& ok) {
  using namespace disksharp;
  json checks = json::array();
  for (double p : ps) {
    const Exponent e = Exponent::from_p(p);
    const double target_C = global_constant(e, tol).value;
    const double target_c = wirtinger_constant_global(e).value;

    const SharpnessStudy cp_study = sharpness_study_Cp(e, {0.9, 0.99, 0.999}, tol);
    const double raw = cp_study.ratios.back();
    const bool pass_extrap = std::abs(cp_study.extrapolated - target_C) <= 2e-3 * target_C;
    const bool pass_raw = std::abs(raw - target_C) <= 1e-2 * target_C;

    const SharpnessStudy wc_study = sharpness_study_cp(e, +1, {0.9, 0.99, 0.999}, tol);
    const bool pass_extrap_c = std::abs(wc_study.extrapolated - target_c) <= 2e-3 * target_c;
    const bool pass_raw_c = std::abs(wc_study.ratios.back() - target_c) <= 1e-2 * target_c;

    const double q = e.q();
    std::vector<double> norms;
    for (double rho : {0.9, 0.99, 0.999}) norms.push_back(extremal_norm_power(e, rho, tol));
    const double norm_limit = extrapolate_rho_ladder({0.9, 0.99, 0.999}, norms);
    const double norm_limit_target = std::pow(kPi, q) / std::pow(2.0, q) * std::pow(target_C, q);
    const bool pass_ewo = std::abs(norm_limit - norm_limit_target) <= 5e-3 * norm_limit_target;

    const bool pass = pass_extrap && pass_raw && pass_extrap_c && pass_raw_c && pass_ewo;
    ok = ok && pass;
    json c;
    c["name"] = "sharpness p=" + fmt10(p);
    c["passed"] = pass;
    c["Cp_target"] = round10(target_C);
    c["Cp_extrapolated"] = round10(cp_study.extrapolated);
    c["Cp_ratio_0.999"] = round10(raw);
    c["cp_target"] = round10(target_c);
    c["cp_extrapolated"] = round10(wc_study.extrapolated);
    c["cp_ratio_0.999"] = round10(wc_study.ratios.back());
    c["norm_power_extrapolated"] = round10(norm_limit);
    c["norm_power_target"] = round10(norm_limit_target);
    checks.push_back(std::move(c));
  }
  return checks;
}

json run_fuzz_suite(const std::vector<double>& ps, int trials, std::uint64_t seed, bool& ok) {
  using namespace disksharp;
  json checks = json::array();
  for (double p : ps) {
    FuzzConfig config;
    config.trials = trials;
    config.seed = seed;
    const LemmaReport rep = inequality_fuzz(Exponent::from_p(p), config);
    ok = ok && rep.passed();
    json c = report_to_json(rep);
    c["name"] = "inequality_fuzz p=" + fmt10(p);
    checks.push_back(std::move(c));
  }
  return checks;
}

int run_verify(const std::string& suite, const std::vector<double>& ps, int trials,
               std::uint64_t seed, const GlobalOptions& global) {
  bool ok = true;
  json output;
  output["suite"] = suite;
  output["seed"] = seed;
  json checks = json::array();

  const std::vector<double> fuzz_ps = ps.empty() ? std::vector<double>{1.5, 2.0, 4.0} : ps;
  const std::vector<double> sharp_ps = ps.empty() ? std::vector<double>{1.5, 2.0, 3.0, 5.0} : ps;

  const auto append = [&checks](json more) {
    for (auto& item : more) checks.push_back(std::move(item));
  };

  try {
    if (suite == "lemmas" || suite == "all") append(run_lemmas_suite(global.tol, ok));
    if (suite == "crossover" || suite == "all") append(run_crossover_suite(global.tol, ok));
    if (suite == "prudnikov" || suite == "all") append(run_prudnikov_suite(seed, 1e-8, ok));
    if (suite == "sharpness" || suite == "all") append(run_sharpness_suite(sharp_ps, global.tol, ok));
    if (suite == "fuzz" || suite == "all") append(run_fuzz_suite(fuzz_ps, trials, seed, ok));
  } catch (const disksharp::convergence_error& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 3;
  }

  output["checks"] = std::move(checks);
  output["passed"] = ok;
  std::cout << output.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp constants for gradient estimates of harmonic Hardy functions on the unit disk"};
  app.require_subcommand(1);

  GlobalOptions global;
  if (const char* env = std::getenv("DISK_SHARP_TOL")) {
    try {
      global.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "invalid DISK_SHARP_TOL\n";
      return 2;
    }
    if (!(global.tol > 0.0)) {
      std::cerr << "invalid DISK_SHARP_TOL\n";
      return 2;
    }
  }

  // constant
  std::string c_quantity = "Cp_global";
  std::string c_p = "2";
  std::optional<double> c_r;
  double c_alpha = 0.0, c_tau = 0.0;
  CLI::App* cmd_constant = app.add_subcommand("constant", "Compute one sharp constant");
  cmd_constant->add_option("--quantity", c_quantity, "Cp_global|cp_global|Cp_at_z|cp_at_r|directional")
      ->capture_default_str();
  cmd_constant->add_option("--p", c_p, "Hardy exponent p in (1, inf]; 'inf' accepted")->required();
  double c_r_value = 0.0;
  CLI::Option* c_r_opt = cmd_constant->add_option("--r", c_r_value, "radius 0 <= r < 1");
  cmd_constant->add_option("--alpha", c_alpha, "angle of z");
  cmd_constant->add_option("--tau", c_tau, "direction angle");

  // sweep
  SweepSpec spec;
  std::string s_p_min = "1.05", s_p_max = "20";
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "Sweep a constant over p (figure data)");
  cmd_sweep->add_option("--quantity", spec.quantity, "Cp_global|cp_global|Cp_at_z|cp_at_r|directional")
      ->required();
  cmd_sweep->add_option("--p-min", s_p_min, "lower end of the p range")->capture_default_str();
  cmd_sweep->add_option("--p-max", s_p_max, "upper end of the p range; 'inf' accepted")
      ->capture_default_str();
  cmd_sweep->add_option("--steps", spec.steps, "number of grid points (>= 2)")->capture_default_str();
  double s_r_value = 0.0;
  CLI::Option* s_r_opt = cmd_sweep->add_option("--r", s_r_value, "radius for *_at_z / *_at_r");
  cmd_sweep->add_option("--alpha", spec.alpha, "angle of z");
  cmd_sweep->add_option("--tau", spec.tau, "direction angle");
  cmd_sweep->add_option("--format", spec.format, "csv|json")->capture_default_str();
  cmd_sweep->add_option("--out", spec.out, "output path (stdout when omitted)");
  cmd_sweep->add_option("--jobs", spec.jobs, "concurrent sweep cells")->capture_default_str();

  // verify
  std::string v_suite = "all";
  std::uint64_t v_seed = 12345;
  int v_trials = 1000;
  std::vector<double> v_ps;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run numerical verification suites");
  cmd_verify->add_option("--suite", v_suite, "lemmas|fuzz|prudnikov|crossover|sharpness|all")
      ->capture_default_str();
  cmd_verify->add_option("--seed", v_seed, "random seed")->capture_default_str();
  cmd_verify->add_option("--trials", v_trials, "fuzz trials per p")->capture_default_str();
  cmd_verify->add_option("--p", v_ps, "exponent list (defaults per suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_constant->parsed()) {
      std::optional<double> r;
      if (c_r_opt->count() > 0) r = c_r_value;
      const disksharp::ConstantReport report =
          compute_quantity(c_quantity, parse_p(c_p), r, c_alpha, c_tau, global.tol);
      std::cout << fmt10(report.value) << " " << method_name(report.method) << " "
                << fmt10(report.error_estimate) << "\n";
      return 0;
    }
    if (cmd_sweep->parsed()) {
      if (spec.steps < 2) throw CLI::ValidationError("--steps", "needs at least 2 grid points");
      if (spec.format != "csv" && spec.format != "json")
        throw CLI::ValidationError("--format", "must be csv or json");
      spec.p_min = parse_p(s_p_min);
      spec.p_max = parse_p(s_p_max);
      if (!(spec.p_min > 1.0) || !(spec.p_max >= spec.p_min))
        throw CLI::ValidationError("--p-min/--p-max", "range must lie in (1, inf]");
      if (s_r_opt->count() > 0) spec.r = s_r_value;
      return run_sweep(spec, global);
    }
    if (cmd_verify->parsed()) {
      const bool known = v_suite == "lemmas" || v_suite == "fuzz" || v_suite == "prudnikov" ||
                         v_suite == "crossover" || v_suite == "sharpness" || v_suite == "all";
      if (!known) throw CLI::ValidationError("--suite", "unknown suite " + v_suite);
      return run_verify(v_suite, v_ps, v_trials, v_seed, global);
    }
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const disksharp::convergence_error& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 3;
  } catch (const std::domain_error& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
  return 2;
}
