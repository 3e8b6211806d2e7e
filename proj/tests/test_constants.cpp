#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "disksharp/constants.hpp"
#include "disksharp/specfun.hpp"

using namespace disksharp;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Dense uniform trapezoid evaluation of the directional-constant integral,
// independent of the adaptive machinery.
double trapezoid_directional(double q, double r, double phase, int nodes) {
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double s = kTwoPi * i / nodes;
    sum += std::pow(std::abs(std::cos(s + phase)), q) *
           std::pow(1.0 + r * r - 2.0 * r * std::cos(s), q - 1.0);
  }
  return std::pow(sum * kTwoPi / nodes, 1.0 / q) / kPi;
}
}  // namespace

TEST_SUITE("constants") {

TEST_CASE("exponent conjugation") {
  CHECK(Exponent::from_p(2.0).q() == doctest::Approx(2.0));
  CHECK(Exponent::from_p(1.5).q() == doctest::Approx(3.0));
  CHECK(Exponent::infinity().q() == 1.0);
  CHECK(Exponent::infinity().inv_p() == 0.0);
  CHECK(Exponent::from_q(1.0).is_infinite());
  CHECK(Exponent::from_q(3.0).p() == doctest::Approx(1.5));
  CHECK_THROWS_AS(Exponent::from_p(1.0), std::domain_error);
  CHECK_THROWS_AS(Exponent::from_p(0.7), std::domain_error);
  // 1/p + 1/q = 1
  std::mt19937 rng(4400);
  std::uniform_real_distribution<double> up(1.01, 40.0);
  for (int i = 0; i < 50; ++i) {
    const Exponent e = Exponent::from_p(up(rng));
    CHECK(1.0 / e.p() + 1.0 / e.q() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("directional constant endpoints") {
  std::mt19937 rng(4401);
  std::uniform_real_distribution<double> ur(0.0, 0.95), ua(-kPi, kPi);
  // q = 1: the weight drops out and every direction gives 4/pi
  for (int i = 0; i < 5; ++i) {
    const DiskPoint z(ur(rng), ua(rng));
    const ConstantReport rep = directional_constant(Exponent::infinity(), z, Direction(ua(rng)));
    CHECK(rep.value == doctest::Approx(4.0 / kPi).epsilon(1e-10));
  }
  // p = 2 at the origin: 1/sqrt(pi)
  const ConstantReport center = directional_constant(Exponent::from_p(2.0), DiskPoint(0.0, 0.0),
                                                     Direction(0.3));
  CHECK(center.value == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-11));
}

TEST_CASE("directional constant against a dense trapezoid oracle") {
  const Exponent e = Exponent::from_p(3.0);
  const DiskPoint z(0.6, 0.4);
  const ConstantReport rep = directional_constant(e, z, Direction(z.alpha));
  const double oracle = trapezoid_directional(e.q(), z.r, 0.0, 1 << 20);
  CHECK(rep.value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("gradient constant closed form at p = 2") {
  for (double r : {0.0, 0.3, 0.6, 0.9, 0.99}) {
    const double expected = std::sqrt(1.0 + r * r) / std::sqrt(kPi);
    CHECK(gradient_constant_closed(Exponent::from_p(2.0), r).value ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(gradient_constant(Exponent::from_p(2.0), DiskPoint(r, 1.0)).value ==
          doctest::Approx(expected).epsilon(1e-10));
  }
  CHECK(gradient_constant_closed(Exponent::from_p(2.0), 0.0).value ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(gradient_constant_closed(Exponent::from_p(1.5), 0.3), std::domain_error);
}

TEST_CASE("gradient constant quadrature agrees with the closed form") {
  CHECK(gradient_constant(Exponent::from_p(5.0), DiskPoint(0.8, 0.0)).value ==
        doctest::Approx(gradient_constant_closed(Exponent::from_p(5.0), 0.8).value).epsilon(1e-9));
}

TEST_CASE("gradient constant for p < 2 is the radial maximum") {
  const Exponent e = Exponent::from_p(1.5);
  const DiskPoint z(0.7, 0.2);
  const double radial = directional_constant(e, z, Direction(z.alpha)).value;
  const double tangential = directional_constant(e, z, Direction(z.alpha + kPi / 2.0)).value;
  CHECK(gradient_constant(e, z).value == doctest::Approx(radial).epsilon(1e-12));
  CHECK(radial > tangential);
}

TEST_CASE("global constant anchors") {
  CHECK(global_constant(Exponent::from_p(2.0)).value ==
        doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-11));
  CHECK(global_constant(Exponent::infinity()).value == doctest::Approx(4.0 / kPi).epsilon(1e-11));
}

TEST_CASE("p = 2 branch agreement of the global integrals") {
  // both int cos^2 (2 - 2cos) and int sin^2 (2 - 2cos) equal 2 pi
  const double sin_branch = global_constant(Exponent::from_p(2.0)).value;
  const double cos_branch = global_constant(Exponent::from_p(2.0 - 1e-12)).value;
  CHECK(sin_branch == doctest::Approx(cos_branch).epsilon(1e-9));
  CHECK(std::pow(kPi * sin_branch, 2.0) == doctest::Approx(kTwoPi).epsilon(1e-10));
}

TEST_CASE("wirtinger constant anchors and the quadrature route") {
  for (double r : {0.0, 0.4, 0.9}) {
    CHECK(wirtinger_constant(Exponent::from_p(2.0), r).value ==
          doctest::Approx(std::sqrt(1.0 + r * r) / std::sqrt(kTwoPi)).epsilon(1e-12));
    CHECK(wirtinger_constant(Exponent::infinity(), r).value == doctest::Approx(1.0).epsilon(1e-13));
  }
  const ConstantReport closed = wirtinger_constant(Exponent::from_p(1.2), 0.9);
  const ConstantReport quad = wirtinger_constant_quadrature(Exponent::from_p(1.2), 0.9);
  CHECK(closed.method == Method::ClosedForm);
  CHECK(quad.method == Method::Quadrature);
  CHECK(closed.value == doctest::Approx(quad.value).epsilon(1e-8));
}

TEST_CASE("global wirtinger constant") {
  CHECK(wirtinger_constant_global(Exponent::infinity()).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  // r -> 1 limit of the pointwise constant is the global one
  const double limit = wirtinger_constant(Exponent::from_p(2.0), 1.0 - 1e-6).value;
  CHECK(wirtinger_constant_global(Exponent::from_p(2.0)).value ==
        doctest::Approx(limit).epsilon(1e-5));
  CHECK(wirtinger_constant_global(Exponent::from_p(2.0)).value ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("sandwich c_p < C_p < 2 c_p") {
  for (double p : {1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0}) {
    const Exponent e = Exponent::from_p(p);
    const double cp = wirtinger_constant_global(e).value;
    const double Cp = global_constant(e).value;
    CHECK(cp < Cp);
    CHECK(Cp < 2.0 * cp);
  }
}

TEST_CASE("macintyre-rogosinski factor") {
  CHECK(mr_factor(Exponent::from_p(2.0), 0.0) == doctest::Approx(1.0));
  CHECK(mr_factor(Exponent::from_p(2.0), 0.5) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
  CHECK(mr_factor(Exponent::infinity(), 0.7) == doctest::Approx(1.0));
  // improvement at q = 2, r = 0.5: c_p(z)^q stays below the MR factor^q
  const double lhs = std::pow(kTwoPi, -1.0) * hyp2f1(-1.0, -1.0, 1.0, 0.25);
  CHECK(lhs == doctest::Approx(1.25 / kTwoPi).epsilon(1e-13));
  CHECK(lhs < 1.25);
}

TEST_CASE("directional ordering across directions") {
  std::mt19937 rng(4402);
  std::uniform_real_distribution<double> ua(-kPi, kPi);
  for (double p : {1.4, 3.0}) {
    const Exponent e = Exponent::from_p(p);
    const DiskPoint z(0.55, 0.9);
    const double radial = directional_constant(e, z, Direction(z.alpha)).value;
    const double tangential = directional_constant(e, z, Direction(z.alpha + kPi / 2.0)).value;
    const double lo = std::min(radial, tangential), hi = std::max(radial, tangential);
    for (int i = 0; i < 20; ++i) {
      const double v = directional_constant(e, z, Direction(ua(rng))).value;
      CHECK(v >= lo - 1e-9);
      CHECK(v <= hi + 1e-9);
    }
    if (p < 2.0)
      CHECK(radial > tangential);
    else
      CHECK(tangential > radial);
  }
}

TEST_CASE("p = 2 directional constant does not depend on the direction") {
  const Exponent e = Exponent::from_p(2.0);
  const DiskPoint z(0.66, -0.4);
  const double reference = directional_constant(e, z, Direction(0.0)).value;
  for (int i = 0; i < 20; ++i) {
    const double tau = kTwoPi * i / 20.0;
    CHECK(directional_constant(e, z, Direction(tau)).value ==
          doctest::Approx(reference).epsilon(1e-10));
  }
}

TEST_CASE("gradient constant grows with r and stays below the global constant") {
  for (double p : {1.3, 2.0, 4.0}) {
    const Exponent e = Exponent::from_p(p);
    const double global = global_constant(e).value;
    double prev = 0.0;
    for (double r : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95, 0.99}) {
      const double v = gradient_constant(e, DiskPoint(r, 0.0)).value;
      CHECK(v >= prev - 1e-10);
      CHECK(v <= global + 1e-9);
      prev = v;
    }
  }
}

TEST_CASE("global constant has its minimum at p = 2") {
  double best = 1e9;
  double best_p = 0.0;
  std::vector<double> grid;
  for (int i = 0; i <= 120; ++i) grid.push_back(1.05 + (20.0 - 1.05) * i / 120.0);
  for (double p : grid) {
    const double v = global_constant(Exponent::from_p(p)).value;
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  CHECK(std::abs(best_p - 2.0) <= (20.0 - 1.05) / 120.0 + 1e-12);
}

}  // TEST_SUITE
