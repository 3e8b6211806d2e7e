#pragma once

#include <limits>

#include "disksharp/kernel.hpp"

namespace disksharp {

/// Hardy exponent p in (1, inf], with its conjugate q = p/(p-1) in [1, inf).
/// p = inf is a first-class value and maps to q = 1. The conjugate is always
/// derived, never stored.
class Exponent {
 public:
  static Exponent from_p(double p);
  static Exponent from_q(double q);
  static Exponent infinity();

  double p() const { return p_; }
  double q() const { return is_infinite() ? 1.0 : p_ / (p_ - 1.0); }
  double inv_p() const { return is_infinite() ? 0.0 : 1.0 / p_; }
  bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }

 private:
  explicit Exponent(double p) : p_(p) {}
  double p_;
};

enum class Method { Quadrature, ClosedForm };

/// A computed sharp constant together with how it was obtained and an
/// absolute error estimate. Where a quadrature and a closed-form route both
/// exist they are required to agree within combined estimates.
struct ConstantReport {
  double value;
  Method method;
  double error_estimate;
};

/// C_p(z, e^{i tau}) = (1/pi) ( int_{-pi}^{pi} |cos(s + tau - alpha)|^q
///                      (1 + r^2 - 2 r cos s)^{q-1} ds )^{1/q},
/// the sharp constant of |Dw(z) e^{i tau}| <= C (1-r^2)^{-1-1/p} ||w||.
ConstantReport directional_constant(const Exponent& e, const DiskPoint& z, const Direction& d,
                                    double tol = 1e-10);

/// C_p(z): the directional constant in the maximizing direction — radial
/// for p < 2, tangential for p >= 2. For p >= 2 the quadrature value is
/// cross-checked against the closed form.
ConstantReport gradient_constant(const Exponent& e, const DiskPoint& z, double tol = 1e-10);

/// Closed form of C_p(z) for p >= 2:
/// (2^{1/q}/pi) ( B((1+q)/2, 1/2) 2F1(1 - 3q/2, 1 - q; 1 + q/2; r^2) )^{1/q}.
ConstantReport gradient_constant_closed(const Exponent& e, double r);

/// C_p = sup_z C_p(z), the r = 1 integral: |cos s|^q weight for 1 < p < 2,
/// |sin s|^q weight for p >= 2, both against (2 - 2 cos s)^{q-1}.
ConstantReport global_constant(const Exponent& e, double tol = 1e-10);

/// c_p(z) = (2 pi)^{1/q - 1} ( 2F1(1 - q, 1 - q; 1; r^2) )^{1/q}, the sharp
/// Wirtinger-derivative constant. Cross-checked against the quadrature route.
ConstantReport wirtinger_constant(const Exponent& e, double r, double tol = 1e-10);

/// The quadrature route behind c_p(z):
/// (1/(2 pi)) ( int_0^{2 pi} (1 + r^2 - 2 r cos s)^{q-1} ds )^{1/q}.
ConstantReport wirtinger_constant_quadrature(const Exponent& e, double r, double tol = 1e-10);

/// c_p = 2^{(q-1)/q} pi^{-1 + 1/(2q)} ( Gamma(q - 1/2) / Gamma(q) )^{1/q}.
ConstantReport wirtinger_constant_global(const Exponent& e);

/// Macintyre-Rogosinski comparison factor (1 + r^2/(p-1)^2)^{1/q}.
double mr_factor(const Exponent& e, double r);

}  // namespace disksharp
