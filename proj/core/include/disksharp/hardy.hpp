#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "disksharp/constants.hpp"
#include "disksharp/kernel.hpp"
#include "disksharp/quadrature.hpp"

namespace disksharp {

/// Trigonometric polynomial sum_{k = k_min}^{k_min + n - 1} c_k e^{i k theta}.
struct TrigPoly {
  int k_min = 0;
  std::vector<std::complex<double>> coeffs;

  std::complex<double> coeff(int k) const;
  int k_max() const { return k_min + static_cast<int>(coeffs.size()) - 1; }
};

/// M uniform samples f(2 pi j / M), M a power of two, M >= 16. The harmonic
/// extension of a Sampled function is the discrete Poisson sum
/// (1/M) sum_j P(z, theta_j) f_j — exact formulas, no quadrature.
struct Sampled {
  std::vector<std::complex<double>> values;
};

/// A named family evaluable pointwise (used by the extremal families).
/// kinks lists boundary angles where the derivative may jump.
struct Named {
  std::string tag;
  std::function<std::complex<double>(double)> eval;
  std::vector<double> kinks;
};

/// Boundary data on the unit circle.
class BoundaryFunction {
 public:
  using Variant = std::variant<TrigPoly, Sampled, Named>;

  static BoundaryFunction trig_poly(TrigPoly poly);
  static BoundaryFunction samples(std::vector<std::complex<double>> values);
  static BoundaryFunction named(Named fn);

  /// Pointwise boundary value. Sampled data returns the nearest sample.
  std::complex<double> operator()(double theta) const;

  /// True for trigonometric polynomials with no negative-frequency content.
  bool is_analytic() const;

  const Variant& data() const { return data_; }

  /// JSON round trip for the trigpoly and samples variants:
  ///   {"type":"trigpoly","k_min":-N,"coeffs":[[re,im],...]}
  ///   {"type":"samples","values":[x,...]} or values of [re,im] pairs.
  std::string to_json_string() const;
  static BoundaryFunction from_json_string(const std::string& text);

 private:
  explicit BoundaryFunction(Variant v) : data_(std::move(v)) {}
  Variant data_;
};

/// Wirtinger derivative pair of a harmonic w = g + conj(h):
/// dz = dw/dz, dzbar = dw/dzbar. The operator norm of the formal
/// differential is |dz| + |dzbar|, and the directional image is
/// Dw(z) e^{i tau} = dz e^{i tau} + dzbar e^{-i tau}.
struct DerivativePair {
  std::complex<double> dz;
  std::complex<double> dzbar;

  double operator_norm() const { return std::abs(dz) + std::abs(dzbar); }
  std::complex<double> directional(const Direction& d) const;
};

/// Poisson extension of a boundary function: w(z) = (1/2pi) int P(z, theta)
/// f(theta) dtheta. Immutable after construction; evaluation is pure.
class HarmonicExtension {
 public:
  explicit HarmonicExtension(BoundaryFunction f) : source_(std::move(f)) {}

  std::complex<double> evaluate(const DiskPoint& z, double tol = 1e-10) const;
  DerivativePair derivative(const DiskPoint& z, double tol = 1e-10) const;
  const BoundaryFunction& source() const { return source_; }

 private:
  BoundaryFunction source_;
};

/// Unnormalized boundary norm ( int_0^{2pi} |f|^p dtheta )^{1/p}; supremum
/// norm for p = inf. The unnormalized measure is the convention throughout:
/// it is what makes |Dw(0)| = C_2(0) ||cos theta||_2 an equality.
double lp_norm(const BoundaryFunction& f, const Exponent& e, double tol = 1e-10);

/// Hardy norm as the supremum over a radius ladder of the unnormalized L^p
/// norms of dilations w(r e^{i theta}); agrees with lp_norm of the boundary
/// data up to discretization error.
double hardy_norm(const HarmonicExtension& w, const Exponent& e, double tol = 1e-10);

/// Grid lower bound for the Bloch constant sup_z (1 - |z|^2) |Dw(z)|,
/// a 64 x 128 polar grid with one refinement pass around the argmax.
double bloch_constant(const HarmonicExtension& w, double tol = 1e-10);

}  // namespace disksharp
