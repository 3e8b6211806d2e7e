#pragma once

#include <vector>

#include "disksharp/constants.hpp"
#include "disksharp/hardy.hpp"

namespace disksharp {

/// Extremal boundary family certifying C_p: in the parameter s of the
/// substitution e^{it} = (rho - e^{is})/(1 - rho e^{is}),
///   f_rho(e^{it}) = (1-rho^2)^{-1/p} |g(s) (1 - cos s)|^{q-1} sign(g(s)),
/// with g = cos (radial direction, p <= 2) or g = sin (tangential, p > 2).
BoundaryFunction make_extremal_Cp(double rho, const Exponent& e);

/// Extremal family certifying c_p:
///   f^{+-}_rho(e^{it}) = (1-rho^2)^{-1/p} (1 - cos s)^{q-1} e^{+- i s},
/// orientation +1 targeting |dw|, -1 targeting |dbar w|.
BoundaryFunction make_extremal_cp(double rho, const Exponent& e, int orientation);

/// (1-rho^2)^{1+1/p} |Dw_rho(rho) e^{i tau}| / ||f_rho||_p with tau the
/// maximizing direction (0 for p <= 2, pi/2 for p > 2); tends to the global
/// constant C_p as rho -> 1. Both integrals are evaluated parametrically in
/// s through the substitution, where the family stays resolved.
double sharpness_ratio_Cp(const Exponent& e, double rho, double tol = 1e-10);

/// Analogous ratio against c_p, targeting |dw| (+1) or |dbar w| (-1).
double sharpness_ratio_cp(const Exponent& e, double rho, int orientation = +1,
                          double tol = 1e-10);

/// ||f_rho||_p^p of the C_p family; tends to pi^q / 2^q C_p^q as rho -> 1.
double extremal_norm_power(const Exponent& e, double rho, double tol = 1e-10);

/// Linear extrapolation to rho = 1 in the variable 1 - rho^2, through the
/// two finest ladder points.
double extrapolate_rho_ladder(const std::vector<double>& rhos, const std::vector<double>& values);

struct SharpnessStudy {
  std::vector<double> rhos;
  std::vector<double> ratios;
  double extrapolated;
};

SharpnessStudy sharpness_study_Cp(const Exponent& e,
                                  const std::vector<double>& rhos = {0.9, 0.99, 0.999},
                                  double tol = 1e-10);
SharpnessStudy sharpness_study_cp(const Exponent& e, int orientation = +1,
                                  const std::vector<double>& rhos = {0.9, 0.99, 0.999},
                                  double tol = 1e-10);

}  // namespace disksharp
