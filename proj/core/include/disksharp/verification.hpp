#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "disksharp/constants.hpp"

namespace disksharp {

/// One verified claim instance: the parameters it ran at, whether it held,
/// and by how much (margin > 0 means satisfied with that much room).
struct LemmaCell {
  std::map<std::string, double> params;
  bool pass = false;
  double margin = 0.0;
  std::string note;
};

struct LemmaReport {
  std::string claim;
  std::vector<LemmaCell> cells;

  bool passed() const;
  double worst_margin() const;
  std::string to_json_string() const;
};

/// directional_integral(t) = int_{-pi}^{pi} |cos(s - t)|^q |r - e^{is}|^{2q-2} ds,
/// pi-periodic in t. r = 1 is admissible here.
double directional_integral(double t, double r, double q, double tol = 1e-10);

/// Extremum locations of directional_integral over t: max at pi/2 and min at 0 for q <= 2,
/// swapped for q > 2; constant at q = 2. Checked on a 128-point grid with
/// golden-section refinement, locations matched within pi/64.
LemmaReport directional_extrema_check(double q, double r, double tol = 1e-10);

/// Boundary maximization: max over r in {0, 0.1, ..., 0.9, 0.99} of
/// int |cos(s-t)|^lambda |r - e^{is}|^{2q-2} ds is dominated by the maximum
/// over t' of the same integral at r = 1.
LemmaReport boundary_dominance_check(double lambda, double q, double t, double tol = 1e-10);

struct CrossoverResult {
  bool degenerate = false;  // direction dependence below resolution (r ~ 0)
  bool found = false;
  double p_star = 0.0;
};

/// The p at which the radial-minus-tangential directional constant changes
/// sign, located by bisection on p in [1.1, 10]. Equals 2 for every r.
CrossoverResult khavinson_crossover(double r, double p_tol = 1e-4, double quad_tol = 1e-10);

/// Prudnikov identity: int_0^pi sin^{mu-1} t (1 + r^2 - 2 r cos t)^{-nu} dt
/// = B(mu/2, 1/2) 2F1(nu, nu + (1-mu)/2; (1+mu)/2; r^2), quadrature against
/// the hypergeometric route.
LemmaReport prudnikov_check(double mu, double nu, double r, double tol = 1e-8);

struct FuzzConfig {
  int trials = 1000;
  std::uint64_t seed = 0;
  int max_degree = 10;
  double r_max = 0.95;
  double rel_tol = 1e-8;
};

/// Randomized testing of the sharp inequalities: seeded random trig
/// polynomials, random z and tau, asserting the directional, gradient and
/// (for analytic data) Wirtinger bounds. Violations carry reproduction data;
/// trials derive their generator state from (seed, index), so results are
/// order-independent.
LemmaReport inequality_fuzz(const Exponent& e, const FuzzConfig& config);

}  // namespace disksharp
