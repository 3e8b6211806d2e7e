#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "disksharp/hardy.hpp"

using namespace disksharp;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TrigPoly cosine_poly() {
  TrigPoly p;
  p.k_min = -1;
  p.coeffs = {cplx(0.5, 0.0), cplx(0.0, 0.0), cplx(0.5, 0.0)};
  return p;
}

TrigPoly random_poly(std::mt19937& rng, int degree, bool analytic = false) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  TrigPoly p;
  p.k_min = analytic ? 0 : -degree;
  p.coeffs.resize(analytic ? degree + 1 : 2 * degree + 1);
  for (auto& c : p.coeffs) c = {gauss(rng), gauss(rng)};
  return p;
}

std::vector<cplx> sample_poly(const TrigPoly& p, std::size_t m) {
  const BoundaryFunction f = BoundaryFunction::trig_poly(p);
  std::vector<cplx> values(m);
  for (std::size_t j = 0; j < m; ++j) values[j] = f(kTwoPi * j / m);
  return values;
}
}  // namespace

TEST_SUITE("hardy") {

TEST_CASE("boundary function validation") {
  CHECK_THROWS_AS(BoundaryFunction::samples(std::vector<cplx>(15)), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::samples(std::vector<cplx>(48)), std::invalid_argument);
  CHECK_NOTHROW(BoundaryFunction::samples(std::vector<cplx>(64)));
  CHECK_THROWS_AS(BoundaryFunction::trig_poly(TrigPoly{}), std::invalid_argument);
  TrigPoly bad;
  bad.coeffs = {cplx(std::nan(""), 0.0)};
  CHECK_THROWS_AS(BoundaryFunction::trig_poly(bad), std::invalid_argument);
}

TEST_CASE("lp norms of simple functions") {
  const Exponent two = Exponent::from_p(2.0);
  TrigPoly one;
  one.coeffs = {cplx(1.0, 0.0)};
  CHECK(lp_norm(BoundaryFunction::trig_poly(one), two) ==
        doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-11));
  const BoundaryFunction cosine = BoundaryFunction::trig_poly(cosine_poly());
  CHECK(lp_norm(cosine, two) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-11));
  CHECK(lp_norm(cosine, Exponent::infinity()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("evaluate: exact spectral extensions") {
  TrigPoly one;
  one.coeffs = {cplx(1.0, 0.0)};
  const HarmonicExtension w1(BoundaryFunction::trig_poly(one));
  CHECK(std::abs(w1.evaluate(DiskPoint(0.77, 2.0)) - cplx(1.0, 0.0)) <= 1e-15);

  const HarmonicExtension wc(BoundaryFunction::trig_poly(cosine_poly()));
  const DiskPoint z(0.5, 0.9);
  CHECK(std::abs(wc.evaluate(z) - cplx(z.to_complex().real(), 0.0)) <= 1e-15);

  TrigPoly cubic;
  cubic.k_min = 3;
  cubic.coeffs = {cplx(1.0, 0.0)};  // e^{3 i theta}
  const HarmonicExtension w3(BoundaryFunction::trig_poly(cubic));
  const DiskPoint z3(0.5, 0.2);
  const cplx expected = std::pow(z3.to_complex(), 3);
  CHECK(std::abs(w3.evaluate(z3) - expected) <= 1e-15);
  CHECK(std::abs(expected - std::polar(0.125, 0.6)) <= 1e-15);
}

TEST_CASE("derivatives of the basic extensions") {
  const HarmonicExtension wc(BoundaryFunction::trig_poly(cosine_poly()));
  for (double r : {0.0, 0.5, 0.9}) {
    const DerivativePair d = wc.derivative(DiskPoint(r, 1.3));
    CHECK(std::abs(d.dz - cplx(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(d.dzbar - cplx(0.5, 0.0)) <= 1e-15);
    CHECK(d.operator_norm() == doctest::Approx(1.0));
  }
  TrigPoly ident;
  ident.k_min = 1;
  ident.coeffs = {cplx(1.0, 0.0)};
  const DerivativePair d = HarmonicExtension(BoundaryFunction::trig_poly(ident))
                               .derivative(DiskPoint(0.4, -0.7));
  CHECK(std::abs(d.dz - cplx(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(d.dzbar) <= 1e-15);
}

TEST_CASE("sampled path agrees with the spectral path") {
  std::mt19937 rng(5501);
  const TrigPoly poly = random_poly(rng, 8);
  const HarmonicExtension spectral(BoundaryFunction::trig_poly(poly));
  const HarmonicExtension sampled(BoundaryFunction::samples(sample_poly(poly, 512)));
  std::uniform_real_distribution<double> ur(0.0, 0.9), ua(-kPi, kPi);
  for (int i = 0; i < 10; ++i) {
    const DiskPoint z(ur(rng), ua(rng));
    CHECK(std::abs(spectral.evaluate(z) - sampled.evaluate(z)) <= 1e-8);
    const DerivativePair ds = spectral.derivative(z);
    const DerivativePair dd = sampled.derivative(z);
    CHECK(std::abs(ds.dz - dd.dz) <= 1e-8);
    CHECK(std::abs(ds.dzbar - dd.dzbar) <= 1e-8);
  }
}

TEST_CASE("mean value at the center") {
  std::mt19937 rng(5502);
  const TrigPoly poly = random_poly(rng, 6);
  const auto values = sample_poly(poly, 128);
  cplx mean = 0.0;
  for (const cplx& v : values) mean += v;
  mean /= static_cast<double>(values.size());
  const HarmonicExtension w(BoundaryFunction::samples(values));
  CHECK(std::abs(w.evaluate(DiskPoint(0.0, 0.0)) - mean) <= 1e-10);
}

TEST_CASE("directional image is bounded by the operator norm and attained") {
  std::mt19937 rng(5503);
  const TrigPoly poly = random_poly(rng, 5);
  const HarmonicExtension w(BoundaryFunction::trig_poly(poly));
  std::uniform_real_distribution<double> ur(0.0, 0.9), ua(-kPi, kPi);
  const DiskPoint z(ur(rng), ua(rng));
  const DerivativePair d = w.derivative(z);
  for (int i = 0; i < 20; ++i)
    CHECK(std::abs(d.directional(Direction(ua(rng)))) <= d.operator_norm() + 1e-12);
  // |dz e^{i tau} + dzbar e^{-i tau}| is maximal when both terms align
  const double tau_star = 0.5 * (std::arg(d.dzbar) - std::arg(d.dz));
  CHECK(std::abs(d.directional(Direction(tau_star))) ==
        doctest::Approx(d.operator_norm()).epsilon(1e-12));
}

TEST_CASE("derivative matches finite differences of evaluate") {
  std::mt19937 rng(5504);
  const TrigPoly poly = random_poly(rng, 7);
  const HarmonicExtension w(BoundaryFunction::trig_poly(poly));
  std::uniform_real_distribution<double> ur(0.0, 0.85), ua(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    const DiskPoint z(ur(rng), ua(rng));
    const Direction tau(ua(rng));
    const cplx dir = tau.unit();
    const double h = 1e-6;
    const cplx zc = z.to_complex();
    const cplx fd = (w.evaluate(DiskPoint::from_complex(zc + h * dir)) -
                     w.evaluate(DiskPoint::from_complex(zc - h * dir))) /
                    (2.0 * h);
    const cplx analytic = w.derivative(z).directional(tau);
    CHECK(std::abs(fd - analytic) <= 1e-5 * (1.0 + std::abs(analytic)));
  }
}

TEST_CASE("hardy norm equals the boundary norm") {
  const Exponent two = Exponent::from_p(2.0);
  TrigPoly one;
  one.coeffs = {cplx(1.0, 0.0)};
  CHECK(hardy_norm(HarmonicExtension(BoundaryFunction::trig_poly(one)), two) ==
        doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-10));

  const HarmonicExtension wc(BoundaryFunction::trig_poly(cosine_poly()));
  CHECK(hardy_norm(wc, two) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-7));

  std::mt19937 rng(5505);
  const TrigPoly poly = random_poly(rng, 6);
  const BoundaryFunction f = BoundaryFunction::trig_poly(poly);
  const Exponent three = Exponent::from_p(3.0);
  const double boundary = lp_norm(f, three);
  CHECK(hardy_norm(HarmonicExtension(f), three) ==
        doctest::Approx(boundary).epsilon(1e-6));
}

TEST_CASE("dilation norms are nondecreasing in r") {
  const Exponent two = Exponent::from_p(2.0);
  const BoundaryFunction f = BoundaryFunction::trig_poly(cosine_poly());
  const HarmonicExtension w(f);
  double prev = 0.0;
  for (double rho : {0.5, 0.9, 0.99, 0.999}) {
    // dilated cosine has norm sqrt(pi) * rho
    TrigPoly d = cosine_poly();
    d.coeffs[0] *= rho;
    d.coeffs[2] *= rho;
    const double v = lp_norm(BoundaryFunction::trig_poly(d), two);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("bloch constants of the model extensions") {
  CHECK(bloch_constant(HarmonicExtension(BoundaryFunction::trig_poly(cosine_poly()))) ==
        doctest::Approx(1.0).epsilon(1e-9));
  TrigPoly ident;
  ident.k_min = 1;
  ident.coeffs = {cplx(1.0, 0.0)};
  CHECK(bloch_constant(HarmonicExtension(BoundaryFunction::trig_poly(ident))) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bloch constant of a smoothed step stays under 4/pi") {
  std::vector<cplx> values(512);
  for (std::size_t j = 0; j < values.size(); ++j)
    values[j] = std::tanh(5.0 * std::cos(kTwoPi * j / values.size()));
  const double beta = bloch_constant(HarmonicExtension(BoundaryFunction::samples(values)));
  CHECK(beta <= 4.0 / kPi + 1e-3);
  CHECK(beta > 1.0);  // close to the extremal configuration
}

TEST_CASE("equality case pinning the norm convention") {
  // f = cos theta, p = 2: |Dw(0)| = C_2(0) ||f||_2 with both sides 1
  const HarmonicExtension w(BoundaryFunction::trig_poly(cosine_poly()));
  const double lhs = w.derivative(DiskPoint(0.0, 0.0)).operator_norm();
  const double rhs = gradient_constant(Exponent::from_p(2.0), DiskPoint(0.0, 0.0)).value *
                     lp_norm(w.source(), Exponent::from_p(2.0));
  CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("json round trips") {
  std::mt19937 rng(5506);
  const TrigPoly poly = random_poly(rng, 4);
  const BoundaryFunction f = BoundaryFunction::trig_poly(poly);
  const BoundaryFunction g = BoundaryFunction::from_json_string(f.to_json_string());
  const auto& gp = std::get<TrigPoly>(g.data());
  REQUIRE(gp.coeffs.size() == poly.coeffs.size());
  CHECK(gp.k_min == poly.k_min);
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) CHECK(gp.coeffs[i] == poly.coeffs[i]);

  std::vector<cplx> samples(32);
  for (std::size_t j = 0; j < samples.size(); ++j) samples[j] = std::cos(kTwoPi * j / 32.0);
  const BoundaryFunction s = BoundaryFunction::samples(samples);
  const BoundaryFunction s2 = BoundaryFunction::from_json_string(s.to_json_string());
  CHECK(std::get<Sampled>(s2.data()).values == samples);

  CHECK_THROWS_AS(BoundaryFunction::from_json_string("{"), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::from_json_string("{\"type\":\"nope\"}"), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::from_json_string("{\"type\":\"samples\",\"values\":[1,2]}"),
                  std::invalid_argument);
}

TEST_CASE("analyticity detection") {
  TrigPoly a;
  a.k_min = 0;
  a.coeffs = {cplx(1.0, 0.0), cplx(0.5, 0.5)};
  CHECK(BoundaryFunction::trig_poly(a).is_analytic());
  CHECK_FALSE(BoundaryFunction::trig_poly(cosine_poly()).is_analytic());
  TrigPoly zeros;
  zeros.k_min = -2;
  zeros.coeffs = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(2.0, 0.0)};
  CHECK(BoundaryFunction::trig_poly(zeros).is_analytic());
}

}  // TEST_SUITE
