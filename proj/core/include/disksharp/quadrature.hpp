#pragma once

#include <functional>
#include <vector>

#include "disksharp/errors.hpp"

namespace disksharp {

struct QuadResult {
  double value;
  double error_estimate;  // absolute, >= 0
  long evaluations;
};

/// Angles in [0, 2pi) where a periodic integrand's derivative may be
/// discontinuous. The interval is pre-split there before adaptive
/// refinement. Sorted and deduplicated modulo 2pi.
class KinkSet {
 public:
  KinkSet() = default;
  KinkSet(std::initializer_list<double> angles);

  void add(double angle);
  const std::vector<double>& locations() const { return locations_; }
  bool empty() const { return locations_.empty(); }

 private:
  std::vector<double> locations_;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to
/// absolute tolerance tol. Globally adaptive: the panel with the largest
/// error estimate is bisected until the estimated total error meets tol.
/// Throws convergence_error when a panel reaches depth 60 or the panel
/// budget is exhausted first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10);

/// Integral of a 2pi-periodic f over one full period, pre-split at the
/// kink locations.
QuadResult integrate_periodic(const std::function<double(double)>& f, const KinkSet& kinks,
                              double tol = 1e-10);

/// integrate_periodic with the absolute tolerance scaled by a crude
/// magnitude estimate of the integral, so that rel_tol acts as a relative
/// target for integrands of any size.
QuadResult integrate_periodic_scaled(const std::function<double(double)>& f,
                                     const KinkSet& kinks, double rel_tol = 1e-10);

}  // namespace disksharp
