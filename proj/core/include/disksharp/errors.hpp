#pragma once

#include <stdexcept>
#include <string>

namespace disksharp {

/// Thrown when an iterative numerical process (adaptive quadrature,
/// hypergeometric series, bisection) exhausts its budget before reaching
/// the requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace disksharp
