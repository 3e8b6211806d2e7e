#pragma once

#include <complex>

namespace disksharp {

/// Normalize an angle to [-pi, pi).
double normalize_angle(double angle);

/// Interior point z = r e^{i alpha} of the unit disk, r < 1 strictly
/// (kernels and constants blow up at the boundary).
struct DiskPoint {
  double r;
  double alpha;

  DiskPoint(double r, double alpha);
  static DiskPoint from_complex(std::complex<double> z);
  std::complex<double> to_complex() const;
};

/// Unit direction e^{i tau}. The radial direction at z = r e^{i alpha} is
/// tau = alpha, the tangential one tau = alpha + pi/2.
struct Direction {
  double tau;

  explicit Direction(double tau);
  std::complex<double> unit() const;
};

/// Poisson kernel P(z, e^{i theta}) = (1 - |z|^2) / |z - e^{i theta}|^2.
double poisson(const DiskPoint& z, double theta);

/// z-Wirtinger derivative of the Poisson kernel,
/// dP = e^{i theta} / (z - e^{i theta})^2.
std::complex<double> d_poisson(const DiskPoint& z, double theta);

/// Conjugate Wirtinger derivative,
/// dbarP = e^{-i theta} / (conj(z) - e^{-i theta})^2.
std::complex<double> dbar_poisson(const DiskPoint& z, double theta);

/// Image of the circle substitution e^{i theta} = (r - e^{i s}) / (1 - r e^{i s}):
/// the angle theta(s) in [-pi, pi) and the Jacobian
/// d theta / d s = (1 - r^2) / (1 + r^2 - 2 r cos s) > 0.
struct MobiusImage {
  double theta;
  double jacobian;
};

MobiusImage mobius_substitution(double r, double s);

/// The substitution image as a point on the unit circle.
std::complex<double> mobius_point(double r, double s);

}  // namespace disksharp
