#include "disksharp/extremal.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "disksharp/quadrature.hpp"

namespace disksharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void validate_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("extremal family: requires 0 < rho < 1");
}

double boundary_weight(double rho, double s) {
  return 1.0 + rho * rho - 2.0 * rho * std::cos(s);
}

// Density of the C_p family in the substituted variable, without the
// (1-rho^2)^{-1/p} normalization.
struct CpFamily {
  bool tangential;  // g = sin instead of cos
  double q;

  double density(double s) const {
    const double base = tangential ? std::sin(s) : std::cos(s);
    return std::pow(std::abs(base * (1.0 - std::cos(s))), q - 1.0) * sign(base);
  }
  KinkSet kinks(double rho) const {
    KinkSet ks = tangential ? KinkSet{0.0, kPi} : KinkSet{kPi / 2.0, 3.0 * kPi / 2.0};
    if (rho > 0.9) ks.add(0.0);
    return ks;
  }
};

CpFamily cp_family_for(const Exponent& e) { return {e.p() > 2.0, e.q()}; }

}  // namespace

BoundaryFunction make_extremal_Cp(double rho, const Exponent& e) {
  validate_rho(rho);
  const CpFamily fam = cp_family_for(e);
  const double norm = std::pow(1.0 - rho * rho, -e.inv_p());
  Named named;
  named.tag = fam.tangential ? "extremal_Cp_tangential" : "extremal_Cp_radial";
  named.eval = [rho, fam, norm](double t) -> std::complex<double> {
    const double s = std::arg(mobius_point(rho, t));  // the map is an involution
    return {norm * fam.density(s), 0.0};
  };
  // kinks in t are the images of the kinks in s under the same map
  for (double s : fam.kinks(rho).locations())
    named.kinks.push_back(std::arg(mobius_point(rho, s)));
  return BoundaryFunction::named(std::move(named));
}

BoundaryFunction make_extremal_cp(double rho, const Exponent& e, int orientation) {
  validate_rho(rho);
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("make_extremal_cp: orientation must be +1 or -1");
  const double q = e.q();
  const double norm = std::pow(1.0 - rho * rho, -e.inv_p());
  Named named;
  named.tag = orientation > 0 ? "extremal_cp_plus" : "extremal_cp_minus";
  named.eval = [rho, q, norm, orientation](double t) -> std::complex<double> {
    const double s = std::arg(mobius_point(rho, t));
    return norm * std::pow(1.0 - std::cos(s), q - 1.0) * std::polar(1.0, orientation * s);
  };
  named.kinks.push_back(std::arg(mobius_point(rho, 0.0)));
  return BoundaryFunction::named(std::move(named));
}

double sharpness_ratio_Cp(const Exponent& e, double rho, double tol) {
  validate_rho(rho);
  const CpFamily fam = cp_family_for(e);
  const KinkSet ks = fam.kinks(rho);
  const std::complex<double> dir = fam.tangential ? std::complex<double>(0.0, 1.0)
                                                  : std::complex<double>(1.0, 0.0);

  // Dw_rho(rho) e^{i tau} transported to the s variable: the boundary angle
  // is t(s), the kernel is evaluated exactly and the Jacobian
  // dt/ds = (1-rho^2)/W closes the substitution.
  const auto derivative_integrand = [&](double s) {
    const std::complex<double> eit = mobius_point(rho, s);
    const std::complex<double> d = rho - eit;
    const std::complex<double> kernel = eit * dir / (d * d);
    const double jac = (1.0 - rho * rho) / boundary_weight(rho, s);
    return kernel.real() * fam.density(s) * jac;
  };
  const QuadResult num = integrate_periodic_scaled(derivative_integrand, ks, tol);

  if (e.is_infinite()) {
    // ||f_rho||_inf: the density magnitude is |g (1-cos)|^{q-1} = 1 at q = 1.
    return (1.0 - rho * rho) * std::abs(num.value) / kPi;
  }

  const double norm_power = extremal_norm_power(e, rho, tol);
  return (1.0 - rho * rho) * std::abs(num.value) / kPi / std::pow(norm_power, e.inv_p());
}

double extremal_norm_power(const Exponent& e, double rho, double tol) {
  validate_rho(rho);
  const CpFamily fam = cp_family_for(e);
  const double q = fam.q;
  const auto integrand = [&](double s) {
    const double base = fam.tangential ? std::sin(s) : std::cos(s);
    return std::pow(std::abs(base * (1.0 - std::cos(s))), q) / boundary_weight(rho, s);
  };
  return integrate_periodic_scaled(integrand, fam.kinks(rho), tol).value;
}

double sharpness_ratio_cp(const Exponent& e, double rho, int orientation, double tol) {
  validate_rho(rho);
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("sharpness_ratio_cp: orientation must be +1 or -1");
  const double q = e.q();
  KinkSet ks;
  ks.add(0.0);

  // dw (orientation +) or dbar w (orientation -) of the extension at z = rho,
  // again parametrically in s.
  const auto integrand = [&](double s) -> std::complex<double> {
    const std::complex<double> eit = mobius_point(rho, s);
    const double jac = (1.0 - rho * rho) / boundary_weight(rho, s);
    const double g = std::pow(1.0 - std::cos(s), q - 1.0);
    const std::complex<double> f = g * std::polar(1.0, orientation * s);
    if (orientation > 0) {
      const std::complex<double> d = rho - eit;
      return eit / (d * d) * f * jac;
    }
    const std::complex<double> d = rho - std::conj(eit);
    return std::conj(eit) / (d * d) * f * jac;
  };
  const QuadResult re = integrate_periodic_scaled([&](double s) { return integrand(s).real(); }, ks, tol);
  const QuadResult im = integrate_periodic_scaled([&](double s) { return integrand(s).imag(); }, ks, tol);
  const double mag = std::hypot(re.value, im.value) / kTwoPi;

  if (e.is_infinite()) return (1.0 - rho * rho) * mag;

  const auto norm_integrand = [&](double s) {
    return std::pow(1.0 - std::cos(s), q) / boundary_weight(rho, s);
  };
  const double norm_power = integrate_periodic_scaled(norm_integrand, ks, tol).value;
  return (1.0 - rho * rho) * mag / std::pow(norm_power, e.inv_p());
}

double extrapolate_rho_ladder(const std::vector<double>& rhos, const std::vector<double>& values) {
  if (rhos.size() != values.size() || rhos.size() < 2)
    throw std::invalid_argument("extrapolate_rho_ladder: needs two or more ladder points");
  const std::size_t n = rhos.size();
  const double x1 = 1.0 - rhos[n - 2] * rhos[n - 2];
  const double x2 = 1.0 - rhos[n - 1] * rhos[n - 1];
  const double v1 = values[n - 2];
  const double v2 = values[n - 1];
  return (v2 * x1 - v1 * x2) / (x1 - x2);
}

SharpnessStudy sharpness_study_Cp(const Exponent& e, const std::vector<double>& rhos, double tol) {
  SharpnessStudy study;
  study.rhos = rhos;
  for (double rho : rhos) study.ratios.push_back(sharpness_ratio_Cp(e, rho, tol));
  study.extrapolated = extrapolate_rho_ladder(study.rhos, study.ratios);
  return study;
}

SharpnessStudy sharpness_study_cp(const Exponent& e, int orientation,
                                  const std::vector<double>& rhos, double tol) {
  SharpnessStudy study;
  study.rhos = rhos;
  for (double rho : rhos) study.ratios.push_back(sharpness_ratio_cp(e, rho, orientation, tol));
  study.extrapolated = extrapolate_rho_ladder(study.rhos, study.ratios);
  return study;
}

}  // namespace disksharp
