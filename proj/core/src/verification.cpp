#include "disksharp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "disksharp/hardy.hpp"
#include "disksharp/quadrature.hpp"
#include "disksharp/specfun.hpp"

namespace disksharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circle_weight(double r, double s, double expo) {
  return std::pow(1.0 + r * r - 2.0 * r * std::cos(s), expo);
}

// Golden-section search for the maximum of fn on [lo, hi] (fn unimodal
// there after the grid has bracketed the extremum).
double golden_max(const std::function<double(double)>& fn, double lo, double hi, double x_tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (hi - lo > x_tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = fn(x1);
    }
  }
  return 0.5 * (lo + hi);
}

double mod_pi_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const LemmaCell& c) { return c.pass; });
}

double LemmaReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const LemmaCell& c : cells) worst = std::min(worst, c.margin);
  return cells.empty() ? 0.0 : worst;
}

std::string LemmaReport::to_json_string() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["passed"] = passed();
  j["worst_margin"] = worst_margin();
  auto& cells_json = j["cells"] = nlohmann::json::array();
  for (const LemmaCell& c : cells) {
    nlohmann::json cell;
    cell["pass"] = c.pass;
    cell["margin"] = c.margin;
    if (!c.note.empty()) cell["note"] = c.note;
    for (const auto& [key, value] : c.params) cell["params"][key] = value;
    cells_json.push_back(std::move(cell));
  }
  return j.dump();
}

double directional_integral(double t, double r, double q, double tol) {
  if (!(q >= 1.0)) throw std::domain_error("directional_integral: requires q >= 1");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("directional_integral: requires 0 <= r <= 1");
  const auto f = [=](double s) {
    return std::pow(std::abs(std::cos(s - t)), q) * circle_weight(r, s, q - 1.0);
  };
  KinkSet ks{t + kPi / 2.0, t + 3.0 * kPi / 2.0};
  if (r > 0.9) ks.add(0.0);
  return integrate_periodic_scaled(f, ks, tol).value;
}

LemmaReport directional_extrema_check(double q, double r, double tol) {
  LemmaReport report;
  report.claim = "directional_integral extrema: max at pi/2 and min at 0 for q <= 2, swapped for q > 2";

  const auto aq = [&](double t) { return directional_integral(t, r, q, tol); };

  constexpr int kGrid = 128;
  std::vector<double> values(kGrid);
  double vmax = -1.0, vmin = std::numeric_limits<double>::infinity();
  int imax = 0, imin = 0;
  for (int i = 0; i < kGrid; ++i) {
    values[i] = aq(kPi * i / kGrid);  // directional_integral is pi-periodic
    if (values[i] > vmax) vmax = values[i], imax = i;
    if (values[i] < vmin) vmin = values[i], imin = i;
  }

  LemmaCell cell;
  cell.params = {{"q", q}, {"r", r}};

  const double spread = vmax - vmin;
  if (std::abs(q - 2.0) < 1e-12 || spread < 1e-8 * std::max(1.0, vmax)) {
    // Degenerate cases (q = 2, r = 0, q = 1): directional_integral is constant in t.
    cell.pass = spread <= 1e-9 * std::max(1.0, vmax);
    cell.margin = 1e-9 * std::max(1.0, vmax) - spread;
    cell.note = "constant in t";
    report.cells.push_back(std::move(cell));
    return report;
  }

  const double h = kPi / kGrid;
  const double t_max = golden_max(aq, kPi * imax / kGrid - h, kPi * imax / kGrid + h, 1e-6);
  const double t_min =
      golden_max([&](double t) { return -aq(t); }, kPi * imin / kGrid - h, kPi * imin / kGrid + h, 1e-6);

  const double expected_max = q <= 2.0 ? kPi / 2.0 : 0.0;
  const double expected_min = q <= 2.0 ? 0.0 : kPi / 2.0;
  const double d_max = mod_pi_distance(t_max, expected_max);
  const double d_min = mod_pi_distance(t_min, expected_min);
  const double allowance = kPi / 64.0;

  cell.pass = d_max <= allowance && d_min <= allowance;
  cell.margin = allowance - std::max(d_max, d_min);
  cell.params["t_max"] = t_max;
  cell.params["t_min"] = t_min;
  report.cells.push_back(std::move(cell));
  return report;
}

LemmaReport boundary_dominance_check(double lambda, double q, double t, double tol) {
  if (!(lambda >= 0.0)) throw std::domain_error("boundary_dominance_check: requires lambda >= 0");
  if (!(q >= 1.0)) throw std::domain_error("boundary_dominance_check: requires q >= 1");
  LemmaReport report;
  report.claim = "interior integrals are dominated by a boundary integral";

  const auto integral = [&](double r, double t_shift) {
    const auto f = [=](double s) {
      return std::pow(std::abs(std::cos(s - t_shift)), lambda) * circle_weight(r, s, q - 1.0);
    };
    KinkSet ks;
    if (lambda > 0.0) {
      ks.add(t_shift + kPi / 2.0);
      ks.add(t_shift + 3.0 * kPi / 2.0);
    }
    if (r > 0.9) ks.add(0.0);
    return integrate_periodic_scaled(f, ks, tol).value;
  };

  double lhs = 0.0;
  double lhs_r = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double r = i < 10 ? 0.1 * i : 0.99;
    const double v = integral(r, t);
    if (v > lhs) lhs = v, lhs_r = r;
  }

  // Boundary side: maximize over t' on a grid plus refinement (pi-periodic).
  constexpr int kGrid = 64;
  double rhs = 0.0;
  int best = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double v = integral(1.0, kPi * i / kGrid);
    if (v > rhs) rhs = v, best = i;
  }
  const double h = kPi / kGrid;
  const double t_star =
      golden_max([&](double tp) { return integral(1.0, tp); }, kPi * best / kGrid - h,
                 kPi * best / kGrid + h, 1e-6);
  rhs = std::max(rhs, integral(1.0, t_star));

  LemmaCell cell;
  cell.params = {{"lambda", lambda}, {"q", q}, {"t", t}, {"lhs_argmax_r", lhs_r}};
  cell.margin = rhs - lhs;
  cell.pass = cell.margin >= -1e-7 * std::max(1.0, rhs);
  report.cells.push_back(std::move(cell));
  return report;
}

CrossoverResult khavinson_crossover(double r, double p_tol, double quad_tol) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("khavinson_crossover: requires 0 < r < 1");
  const DiskPoint z(r, 0.0);
  const auto diff = [&](double p) {
    const Exponent e = Exponent::from_p(p);
    const double radial = directional_constant(e, z, Direction(0.0), quad_tol).value;
    const double tangential = directional_constant(e, z, Direction(kPi / 2.0), quad_tol).value;
    return radial - tangential;
  };

  double lo = 1.1, hi = 10.0;
  double flo = diff(lo), fhi = diff(hi);
  CrossoverResult result;
  if (std::max(std::abs(flo), std::abs(fhi)) < 1e-8) {
    result.degenerate = true;
    return result;
  }
  if (flo == 0.0 || fhi == 0.0 || (flo > 0.0) == (fhi > 0.0)) {
    return result;  // no sign change found
  }
  while (hi - lo > p_tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = diff(mid);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  result.found = true;
  result.p_star = 0.5 * (lo + hi);
  return result;
}

LemmaReport prudnikov_check(double mu, double nu, double r, double tol) {
  if (!(mu > 0.0)) throw std::domain_error("prudnikov_check: requires mu > 0");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("prudnikov_check: requires 0 <= r < 1");
  LemmaReport report;
  report.claim = "sin-power Poisson-type integral equals its hypergeometric form";

  const auto f = [=](double t) {
    return std::pow(std::sin(t), mu - 1.0) * circle_weight(r, t, -nu);
  };
  const double lhs = integrate(f, 0.0, kPi, 1e-10).value;
  const double rhs = beta(0.5 * mu, 0.5) * hyp2f1(nu, nu + 0.5 * (1.0 - mu), 0.5 * (1.0 + mu), r * r);

  LemmaCell cell;
  cell.params = {{"mu", mu}, {"nu", nu}, {"r", r}, {"lhs", lhs}, {"rhs", rhs}};
  const double scale = 1.0 + std::abs(rhs);
  cell.margin = tol * scale - std::abs(lhs - rhs);
  cell.pass = cell.margin >= 0.0;
  report.cells.push_back(std::move(cell));
  return report;
}

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  // splitmix-style mixing of (seed, trial) so trials are order-independent
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return std::mt19937_64(x);
}

}  // namespace

LemmaReport inequality_fuzz(const Exponent& e, const FuzzConfig& config) {
  LemmaReport report;
  report.claim = "randomized directional, gradient and Wirtinger bounds";

  double min_slack = std::numeric_limits<double>::infinity();
  int violations = 0;

  for (int trial = 0; trial < config.trials; ++trial) {
    std::mt19937_64 rng = trial_rng(config.seed, trial);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_int_distribution<int> degree_dist(1, config.max_degree);

    const int degree = degree_dist(rng);
    TrigPoly poly;
    poly.k_min = -degree;
    poly.coeffs.resize(2 * static_cast<std::size_t>(degree) + 1);
    for (auto& c : poly.coeffs) c = {gauss(rng), gauss(rng)};

    TrigPoly analytic;
    analytic.k_min = 0;
    analytic.coeffs.assign(poly.coeffs.begin() + degree, poly.coeffs.end());

    const DiskPoint z(config.r_max * uniform(rng), kTwoPi * uniform(rng) - kPi);
    const Direction tau(kTwoPi * uniform(rng) - kPi);

    const HarmonicExtension w(BoundaryFunction::trig_poly(poly));
    const HarmonicExtension wa(BoundaryFunction::trig_poly(analytic));
    const DerivativePair der = w.derivative(z);
    const DerivativePair der_a = wa.derivative(z);

    const double factor = std::pow(1.0 - z.r * z.r, -1.0 - e.inv_p());
    const double norm = lp_norm(w.source(), e);
    const double norm_a = lp_norm(wa.source(), e);

    const double lhs[3] = {std::abs(der.directional(tau)), der.operator_norm(),
                           std::abs(der_a.dz)};
    const double rhs[3] = {directional_constant(e, z, tau).value * factor * norm,
                           gradient_constant(e, z).value * factor * norm,
                           wirtinger_constant(e, z.r).value * factor * norm_a};
    static const char* kNames[3] = {"directional", "gradient", "wirtinger"};

    for (int k = 0; k < 3; ++k) {
      const double slack = (rhs[k] - lhs[k]) / std::max(rhs[k], 1e-300);
      min_slack = std::min(min_slack, slack);
      if (lhs[k] > rhs[k] * (1.0 + config.rel_tol) + 1e-12) {
        ++violations;
        LemmaCell cell;
        cell.pass = false;
        cell.margin = slack;
        cell.note = std::string("violated ") + kNames[k] + " bound";
        cell.params = {{"trial", static_cast<double>(trial)},
                       {"seed", static_cast<double>(config.seed)},
                       {"degree", static_cast<double>(degree)},
                       {"r", z.r},
                       {"alpha", z.alpha},
                       {"tau", tau.tau},
                       {"lhs", lhs[k]},
                       {"rhs", rhs[k]}};
        report.cells.push_back(std::move(cell));
      }
    }
  }

  LemmaCell summary;
  summary.pass = violations == 0;
  summary.margin = min_slack;
  summary.note = "summary: margin is the minimal relative slack over all trials";
  summary.params = {{"trials", static_cast<double>(config.trials)},
                    {"seed", static_cast<double>(config.seed)},
                    {"p", e.p()},
                    {"violations", static_cast<double>(violations)}};
  report.cells.push_back(std::move(summary));
  return report;
}

}  // namespace disksharp
