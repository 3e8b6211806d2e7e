#include "disksharp/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace disksharp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::complex<double> integrate_periodic_complex(
    const std::function<std::complex<double>(double)>& f, const KinkSet& kinks, double tol) {
  const QuadResult re = integrate_periodic([&](double s) { return f(s).real(); }, kinks, tol);
  const QuadResult im = integrate_periodic([&](double s) { return f(s).imag(); }, kinks, tol);
  return {re.value, im.value};
}

KinkSet named_kinks(const Named& fn) {
  KinkSet ks;
  for (double k : fn.kinks) ks.add(k);
  return ks;
}

// Supremum of |f| over a dense grid with a local refinement pass.
double sup_norm_grid(const std::function<double(double)>& magnitude) {
  constexpr int kGrid = 4096;
  double best = 0.0;
  double best_theta = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double theta = kTwoPi * i / kGrid;
    const double m = magnitude(theta);
    if (m > best) {
      best = m;
      best_theta = theta;
    }
  }
  double lo = best_theta - kTwoPi / kGrid;
  double hi = best_theta + kTwoPi / kGrid;
  for (int pass = 0; pass < 40; ++pass) {
    const double m1 = magnitude(lo + (hi - lo) / 3.0);
    const double m2 = magnitude(hi - (hi - lo) / 3.0);
    if (m1 < m2)
      lo = lo + (hi - lo) / 3.0;
    else
      hi = hi - (hi - lo) / 3.0;
    best = std::max({best, m1, m2});
  }
  return best;
}

double dilated_norm(const HarmonicExtension& w, const Exponent& e, double rho, double tol);

}  // namespace

std::complex<double> TrigPoly::coeff(int k) const {
  if (k < k_min || k > k_max()) return {0.0, 0.0};
  return coeffs[static_cast<std::size_t>(k - k_min)];
}

BoundaryFunction BoundaryFunction::trig_poly(TrigPoly poly) {
  if (poly.coeffs.empty()) throw std::invalid_argument("TrigPoly: needs at least one coefficient");
  for (const auto& c : poly.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("TrigPoly: coefficients must be finite");
  return BoundaryFunction(Variant{std::move(poly)});
}

BoundaryFunction BoundaryFunction::samples(std::vector<std::complex<double>> values) {
  if (values.size() < 16 || !power_of_two(values.size()))
    throw std::invalid_argument("Sampled: sample count must be a power of two, >= 16");
  return BoundaryFunction(Variant{Sampled{std::move(values)}});
}

BoundaryFunction BoundaryFunction::named(Named fn) {
  if (!fn.eval) throw std::invalid_argument("Named: evaluator must be callable");
  return BoundaryFunction(Variant{std::move(fn)});
}

std::complex<double> BoundaryFunction::operator()(double theta) const {
  return std::visit(
      [&](const auto& v) -> std::complex<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TrigPoly>) {
          std::complex<double> sum = 0.0;
          for (int k = v.k_min; k <= v.k_max(); ++k) sum += v.coeff(k) * std::polar(1.0, k * theta);
          return sum;
        } else if constexpr (std::is_same_v<T, Sampled>) {
          const std::size_t m = v.values.size();
          double x = std::fmod(theta, kTwoPi);
          if (x < 0.0) x += kTwoPi;
          const std::size_t j = static_cast<std::size_t>(std::llround(x * m / kTwoPi)) % m;
          return v.values[j];
        } else {
          return v.eval(theta);
        }
      },
      data_);
}

bool BoundaryFunction::is_analytic() const {
  const auto* poly = std::get_if<TrigPoly>(&data_);
  if (poly == nullptr) return false;
  for (int k = poly->k_min; k < 0; ++k)
    if (poly->coeff(k) != std::complex<double>(0.0, 0.0)) return false;
  return true;
}

std::string BoundaryFunction::to_json_string() const {
  nlohmann::json j;
  if (const auto* poly = std::get_if<TrigPoly>(&data_)) {
    j["type"] = "trigpoly";
    j["k_min"] = poly->k_min;
    auto& coeffs = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : poly->coeffs) coeffs.push_back({c.real(), c.imag()});
  } else if (const auto* s = std::get_if<Sampled>(&data_)) {
    j["type"] = "samples";
    bool complex_valued = false;
    for (const auto& v : s->values) complex_valued = complex_valued || v.imag() != 0.0;
    auto& values = j["values"] = nlohmann::json::array();
    for (const auto& v : s->values) {
      if (complex_valued)
        values.push_back({v.real(), v.imag()});
      else
        values.push_back(v.real());
    }
  } else {
    throw std::invalid_argument("BoundaryFunction: named families are not serializable");
  }
  return j.dump();
}

BoundaryFunction BoundaryFunction::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("BoundaryFunction: malformed JSON: ") + err.what());
  }
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("BoundaryFunction: JSON must be an object with a \"type\" field");
  const std::string type = j["type"].get<std::string>();
  if (type == "trigpoly") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw std::invalid_argument("BoundaryFunction: trigpoly needs a \"coeffs\" array");
    TrigPoly poly;
    poly.k_min = j.value("k_min", 0);
    for (const auto& c : j["coeffs"]) {
      if (!c.is_array() || c.size() != 2)
        throw std::invalid_argument("BoundaryFunction: coefficients must be [re, im] pairs");
      poly.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return trig_poly(std::move(poly));
  }
  if (type == "samples") {
    if (!j.contains("values") || !j["values"].is_array())
      throw std::invalid_argument("BoundaryFunction: samples needs a \"values\" array");
    std::vector<std::complex<double>> values;
    for (const auto& v : j["values"]) {
      if (v.is_number())
        values.emplace_back(v.get<double>(), 0.0);
      else if (v.is_array() && v.size() == 2)
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      else
        throw std::invalid_argument("BoundaryFunction: samples must be numbers or [re, im] pairs");
    }
    return samples(std::move(values));
  }
  throw std::invalid_argument("BoundaryFunction: unknown type \"" + type + "\"");
}

std::complex<double> DerivativePair::directional(const Direction& d) const {
  return dz * d.unit() + dzbar * std::conj(d.unit());
}

std::complex<double> HarmonicExtension::evaluate(const DiskPoint& z, double tol) const {
  return std::visit(
      [&](const auto& v) -> std::complex<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TrigPoly>) {
          // exact spectral path: z^k for k >= 0, conj(z)^{|k|} for k < 0
          const std::complex<double> zc = z.to_complex();
          const std::complex<double> zb = std::conj(zc);
          std::complex<double> sum = 0.0;
          std::complex<double> pw = 1.0;
          for (int k = 0; k <= std::max(v.k_max(), 0); ++k) {
            if (k >= v.k_min && k <= v.k_max()) sum += v.coeff(k) * pw;
            pw *= zc;
          }
          pw = zb;
          for (int k = -1; k >= std::min(v.k_min, -1); --k) {
            if (k >= v.k_min && k <= v.k_max()) sum += v.coeff(k) * pw;
            pw *= zb;
          }
          return sum;
        } else if constexpr (std::is_same_v<T, Sampled>) {
          const std::size_t m = v.values.size();
          std::complex<double> sum = 0.0;
          for (std::size_t j = 0; j < m; ++j)
            sum += poisson(z, kTwoPi * static_cast<double>(j) / static_cast<double>(m)) * v.values[j];
          return sum / static_cast<double>(m);
        } else {
          const auto f = [&](double theta) { return poisson(z, theta) * v.eval(theta); };
          return integrate_periodic_complex(f, named_kinks(v), tol) / kTwoPi;
        }
      },
      source_.data());
}

DerivativePair HarmonicExtension::derivative(const DiskPoint& z, double tol) const {
  return std::visit(
      [&](const auto& v) -> DerivativePair {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, TrigPoly>) {
          const std::complex<double> zc = z.to_complex();
          const std::complex<double> zb = std::conj(zc);
          std::complex<double> dz = 0.0;
          std::complex<double> dzbar = 0.0;
          std::complex<double> pw = 1.0;
          for (int k = 1; k <= v.k_max(); ++k) {  // d/dz sum c_k z^k
            if (k >= v.k_min) dz += v.coeff(k) * static_cast<double>(k) * pw;
            pw *= zc;
          }
          pw = 1.0;
          for (int k = -1; k >= v.k_min; --k) {  // d/dzbar sum c_k conj(z)^{|k|}
            if (k <= v.k_max()) dzbar += v.coeff(k) * static_cast<double>(-k) * pw;
            pw *= zb;
          }
          return {dz, dzbar};
        } else if constexpr (std::is_same_v<T, Sampled>) {
          const std::size_t m = v.values.size();
          std::complex<double> dz = 0.0;
          std::complex<double> dzbar = 0.0;
          for (std::size_t j = 0; j < m; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
            dz += d_poisson(z, theta) * v.values[j];
            dzbar += dbar_poisson(z, theta) * v.values[j];
          }
          return {dz / static_cast<double>(m), dzbar / static_cast<double>(m)};
        } else {
          const KinkSet ks = named_kinks(v);
          const auto fdz = [&](double theta) { return d_poisson(z, theta) * v.eval(theta); };
          const auto fdzbar = [&](double theta) { return dbar_poisson(z, theta) * v.eval(theta); };
          return {integrate_periodic_complex(fdz, ks, tol) / kTwoPi,
                  integrate_periodic_complex(fdzbar, ks, tol) / kTwoPi};
        }
      },
      source_.data());
}

double lp_norm(const BoundaryFunction& f, const Exponent& e, double tol) {
  if (e.is_infinite()) {
    if (const auto* s = std::get_if<Sampled>(&f.data())) {
      double best = 0.0;
      for (const auto& v : s->values) best = std::max(best, std::abs(v));
      return best;
    }
    return sup_norm_grid([&](double theta) { return std::abs(f(theta)); });
  }
  const double p = e.p();
  if (const auto* s = std::get_if<Sampled>(&f.data())) {
    // composite rule on the sample grid, the Sampled convention
    double sum = 0.0;
    for (const auto& v : s->values) sum += std::pow(std::abs(v), p);
    return std::pow(sum * kTwoPi / static_cast<double>(s->values.size()), 1.0 / p);
  }
  KinkSet ks;
  if (const auto* named = std::get_if<Named>(&f.data())) ks = named_kinks(*named);
  const auto integrand = [&](double theta) { return std::pow(std::abs(f(theta)), p); };
  const QuadResult integral = integrate_periodic_scaled(integrand, ks, tol);
  return std::pow(integral.value, 1.0 / p);
}

namespace {

double dilated_norm(const HarmonicExtension& w, const Exponent& e, double rho, double tol) {
  if (const auto* poly = std::get_if<TrigPoly>(&w.source().data())) {
    TrigPoly dilated = *poly;
    for (int k = poly->k_min; k <= poly->k_max(); ++k)
      dilated.coeffs[static_cast<std::size_t>(k - poly->k_min)] *= std::pow(rho, std::abs(k));
    return lp_norm(BoundaryFunction::trig_poly(std::move(dilated)), e, tol);
  }
  if (const auto* s = std::get_if<Sampled>(&w.source().data())) {
    const std::size_t m = s->values.size();
    if (e.is_infinite()) {
      double best = 0.0;
      for (std::size_t j = 0; j < m; ++j)
        best = std::max(best, std::abs(w.evaluate(DiskPoint(rho, kTwoPi * j / m))));
      return best;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      sum += std::pow(std::abs(w.evaluate(DiskPoint(rho, kTwoPi * j / m))), e.p());
    return std::pow(sum * kTwoPi / static_cast<double>(m), 1.0 / e.p());
  }
  // Named: quadrature of the dilated circle values
  if (e.is_infinite())
    return sup_norm_grid([&](double theta) { return std::abs(w.evaluate(DiskPoint(rho, theta))); });
  const auto integrand = [&](double theta) {
    return std::pow(std::abs(w.evaluate(DiskPoint(rho, theta), tol)), e.p());
  };
  const QuadResult integral = integrate_periodic_scaled(integrand, KinkSet{}, std::max(tol, 1e-8));
  return std::pow(integral.value, 1.0 / e.p());
}

}  // namespace

double hardy_norm(const HarmonicExtension& w, const Exponent& e, double tol) {
  std::vector<double> ladder{0.5, 0.9, 0.99, 0.999};
  if (std::holds_alternative<TrigPoly>(w.source().data())) {
    // The spectral dilation is exact, so the ladder can approach the
    // boundary close enough to make the sup match the boundary norm.
    ladder.push_back(1.0 - 1e-6);
    ladder.push_back(1.0 - 1e-8);
  } else if (const auto* s = std::get_if<Sampled>(&w.source().data())) {
    // The discrete Poisson sum stops resembling its generating function at
    // scale 1/M; keep the ladder inside that regime.
    const double cap = 1.0 - 8.0 / static_cast<double>(s->values.size());
    std::erase_if(ladder, [&](double r) { return r > cap; });
    ladder.push_back(cap);
  }
  double sup = 0.0;
  for (double rho : ladder) sup = std::max(sup, dilated_norm(w, e, rho, tol));
  return sup;
}

double bloch_constant(const HarmonicExtension& w, double tol) {
  constexpr int kRadii = 64;
  constexpr int kAngles = 128;
  constexpr double kRadiusMax = 0.96;
  const auto beta_at = [&](double r, double alpha) {
    const DiskPoint z(std::clamp(r, 0.0, kRadiusMax), alpha);
    return (1.0 - z.r * z.r) * w.derivative(z, tol).operator_norm();
  };

  double best = 0.0;
  double best_r = 0.0;
  double best_alpha = 0.0;
  for (int i = 0; i < kRadii; ++i) {
    const double r = kRadiusMax * i / (kRadii - 1);
    for (int j = 0; j < kAngles; ++j) {
      const double alpha = kTwoPi * j / kAngles;
      const double b = beta_at(r, alpha);
      if (b > best) {
        best = b;
        best_r = r;
        best_alpha = alpha;
      }
    }
  }
  // One refinement pass around the grid argmax.
  const double dr = kRadiusMax / (kRadii - 1);
  const double da = kTwoPi / kAngles;
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) {
      const double b = beta_at(best_r + i * dr / 4.0, best_alpha + j * da / 4.0);
      best = std::max(best, b);
    }
  }
  return best;
}

}  // namespace disksharp
