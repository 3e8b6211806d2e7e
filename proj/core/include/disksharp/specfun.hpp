#pragma once

#include <cstdint>

namespace disksharp {

// Real-parameter special functions used by the closed-form constants:
// Gamma, Beta and the Gauss hypergeometric function 2F1. Everything is
// self-contained double precision; target relative accuracy is ~1e-12
// on the parameter ranges the constants need.

/// Gamma function for real x, x not a non-positive integer.
/// Lanczos approximation (g = 4.7421875, 15 terms) for x >= 0.5,
/// reflection formula below. Relative error <= 1e-12 on [0.5, 50].
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Beta function B(u, v) = Gamma(u) Gamma(v) / Gamma(u + v), u, v > 0.
double beta(double u, double v);

/// Parameters of 2F1(a, b; c; x).
///
/// Invariants enforced by validate():
///  - c is not zero or a negative integer (pole of the series),
///  - x in [0, 1], with x = 1 admissible only when c - a - b > 0
///    (checked at evaluation time, where termination is also known).
struct HypergeometricParams {
  double a;
  double b;
  double c;
  double x;

  void validate() const;
};

struct SeriesResult {
  double value;
  double error_estimate;  // absolute
  long terms;
};

/// Gauss hypergeometric function 2F1(a, b; c; x) on x in [0, 1].
///
/// Direct power series for x <= 0.75, Euler transformation
/// (1-x)^(c-a-b) 2F1(c-a, c-b; c; x) above. A series terminates exactly
/// when a or b is within 1e-9 of a non-positive integer (the parameter is
/// snapped to it). x = 1 is evaluated by Gauss summation and requires
/// c - a - b > 0 unless the series terminates.
double hyp2f1(double a, double b, double c, double x);
double hyp2f1(const HypergeometricParams& p);

/// Same as hyp2f1 but reports the series error estimate, which degrades
/// as x -> 1 for non-terminating parameter sets.
SeriesResult hyp2f1_ex(double a, double b, double c, double x);

}  // namespace disksharp
