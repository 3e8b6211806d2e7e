#include "disksharp/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "disksharp/errors.hpp"
#include "disksharp/quadrature.hpp"
#include "disksharp/specfun.hpp"

namespace disksharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (1 + r^2 - 2 r cos s)^e. The (1 - q) denominator powers of the defining
// integrals are always folded into positive exponents q - 1 here, which
// keeps r = 1, s = 0 finite.
double weight_pow(double r, double s, double e) {
  return std::pow(1.0 + r * r - 2.0 * r * std::cos(s), e);
}

// Kinks of |cos(s + phase)|^q plus the weight's near-boundary zero at s = 0.
KinkSet cosine_kinks(double phase, double r) {
  KinkSet ks{kPi / 2.0 - phase, 3.0 * kPi / 2.0 - phase};
  if (r > 0.9) ks.add(0.0);
  return ks;
}

// value = (I)^{1/q} / scale with the quadrature error pushed through the
// power.
ConstantReport report_from_integral(const QuadResult& integral, double q, double scale) {
  const double value = std::pow(integral.value, 1.0 / q) / scale;
  const double err =
      value * integral.error_estimate / (q * std::max(integral.value, 1e-300));
  return {value, Method::Quadrature, err};
}

// Closed forms inherit the specfun target accuracy, scaled by magnitude.
double closed_form_error(double value, double series_error_rel) {
  return std::abs(value) * (1e-13 + series_error_rel);
}

void check_agreement(const ConstantReport& a, const ConstantReport& b, const char* what) {
  const double tol = 50.0 * (a.error_estimate + b.error_estimate) + 1e-9 * (1.0 + std::abs(a.value));
  if (std::abs(a.value - b.value) > tol)
    throw convergence_error(std::string(what) + ": quadrature and closed form disagree");
}

}  // namespace

Exponent Exponent::from_p(double p) {
  if (std::isnan(p) || !(p > 1.0)) throw std::domain_error("Exponent: requires p > 1 (or inf)");
  return Exponent(p);
}

Exponent Exponent::from_q(double q) {
  if (std::isnan(q) || !(q >= 1.0) || q == std::numeric_limits<double>::infinity())
    throw std::domain_error("Exponent: requires q in [1, inf)");
  if (q == 1.0) return infinity();
  return Exponent(q / (q - 1.0));
}

Exponent Exponent::infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

ConstantReport directional_constant(const Exponent& e, const DiskPoint& z, const Direction& d,
                                    double tol) {
  const double q = e.q();
  const double r = z.r;
  const double phase = d.tau - z.alpha;
  const auto f = [=](double s) {
    return std::pow(std::abs(std::cos(s + phase)), q) * weight_pow(r, s, q - 1.0);
  };
  const QuadResult integral = integrate_periodic_scaled(f, cosine_kinks(phase, r), tol);
  return report_from_integral(integral, q, kPi);
}

ConstantReport gradient_constant(const Exponent& e, const DiskPoint& z, double tol) {
  const bool tangential = e.p() >= 2.0;
  const Direction d(tangential ? z.alpha + kPi / 2.0 : z.alpha);
  ConstantReport quad = directional_constant(e, z, d, tol);
  if (tangential) {
    check_agreement(quad, gradient_constant_closed(e, z.r), "gradient_constant");
  }
  return quad;
}

ConstantReport gradient_constant_closed(const Exponent& e, double r) {
  if (!(e.p() >= 2.0))
    throw std::domain_error("gradient_constant_closed: closed form requires p >= 2");
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("gradient_constant_closed: requires 0 <= r < 1");
  const double q = e.q();
  const SeriesResult f = hyp2f1_ex(1.0 - 1.5 * q, 1.0 - q, 1.0 + 0.5 * q, r * r);
  const double inner = beta(0.5 * (1.0 + q), 0.5) * f.value;
  const double value = std::pow(2.0, 1.0 / q) / kPi * std::pow(inner, 1.0 / q);
  const double rel = f.value != 0.0 ? f.error_estimate / std::abs(f.value) : 0.0;
  return {value, Method::ClosedForm, closed_form_error(value, rel / q)};
}

ConstantReport global_constant(const Exponent& e, double tol) {
  const double q = e.q();
  const bool sine_branch = e.p() >= 2.0;
  KinkSet ks = sine_branch ? KinkSet{0.0, kPi} : KinkSet{kPi / 2.0, 3.0 * kPi / 2.0, 0.0};
  const auto f = [=](double s) {
    const double base = sine_branch ? std::sin(s) : std::cos(s);
    return std::pow(std::abs(base), q) * std::pow(2.0 - 2.0 * std::cos(s), q - 1.0);
  };
  const QuadResult integral = integrate_periodic_scaled(f, ks, tol);
  return report_from_integral(integral, q, kPi);
}

ConstantReport wirtinger_constant(const Exponent& e, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("wirtinger_constant: requires 0 <= r < 1");
  const double q = e.q();
  const SeriesResult f = hyp2f1_ex(1.0 - q, 1.0 - q, 1.0, r * r);
  const double value = std::pow(kTwoPi, 1.0 / q - 1.0) * std::pow(f.value, 1.0 / q);
  const double rel = f.value != 0.0 ? f.error_estimate / std::abs(f.value) : 0.0;
  ConstantReport closed{value, Method::ClosedForm, closed_form_error(value, rel / q)};
  check_agreement(closed, wirtinger_constant_quadrature(e, r, tol), "wirtinger_constant");
  return closed;
}

ConstantReport wirtinger_constant_quadrature(const Exponent& e, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("wirtinger_constant_quadrature: requires 0 <= r < 1");
  const double q = e.q();
  KinkSet ks;
  if (r > 0.9) ks.add(0.0);
  const auto f = [=](double s) { return weight_pow(r, s, q - 1.0); };
  const QuadResult integral = integrate_periodic_scaled(f, ks, tol);
  return report_from_integral(integral, q, kTwoPi);
}

ConstantReport wirtinger_constant_global(const Exponent& e) {
  const double q = e.q();
  const double value = std::pow(2.0, (q - 1.0) / q) * std::pow(kPi, -1.0 + 0.5 / q) *
                       std::pow(gamma(q - 0.5) / gamma(q), 1.0 / q);
  return {value, Method::ClosedForm, closed_form_error(value, 0.0)};
}

double mr_factor(const Exponent& e, double r) {
  if (e.is_infinite()) return 1.0;
  const double pm1 = e.p() - 1.0;
  return std::pow(1.0 + r * r / (pm1 * pm1), 1.0 / e.q());
}

}  // namespace disksharp
