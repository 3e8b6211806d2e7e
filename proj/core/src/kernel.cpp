#include "disksharp/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace disksharp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double normalize_angle(double angle) {
  double x = std::fmod(angle + kPi, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x - kPi;
}

DiskPoint::DiskPoint(double r_, double alpha_) : r(r_), alpha(normalize_angle(alpha_)) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("DiskPoint: requires 0 <= r < 1");
}

DiskPoint DiskPoint::from_complex(std::complex<double> z) {
  return DiskPoint(std::abs(z), std::arg(z));
}

std::complex<double> DiskPoint::to_complex() const { return std::polar(r, alpha); }

Direction::Direction(double tau_) : tau(normalize_angle(tau_)) {}

std::complex<double> Direction::unit() const { return std::polar(1.0, tau); }

double poisson(const DiskPoint& z, double theta) {
  // |z - e^{i theta}|^2 = 1 + r^2 - 2 r cos(theta - alpha)
  const double denom = 1.0 + z.r * z.r - 2.0 * z.r * std::cos(theta - z.alpha);
  return (1.0 - z.r * z.r) / denom;
}

std::complex<double> d_poisson(const DiskPoint& z, double theta) {
  const std::complex<double> e = std::polar(1.0, theta);
  const std::complex<double> d = z.to_complex() - e;
  return e / (d * d);
}

std::complex<double> dbar_poisson(const DiskPoint& z, double theta) {
  const std::complex<double> e = std::polar(1.0, -theta);
  const std::complex<double> d = std::conj(z.to_complex()) - e;
  return e / (d * d);
}

MobiusImage mobius_substitution(double r, double s) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("mobius_substitution: requires 0 <= r < 1");
  const double jacobian = (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(s));
  return {normalize_angle(std::arg(mobius_point(r, s))), jacobian};
}

std::complex<double> mobius_point(double r, double s) {
  const std::complex<double> e = std::polar(1.0, s);
  return (r - e) / (1.0 - r * e);
}

}  // namespace disksharp
