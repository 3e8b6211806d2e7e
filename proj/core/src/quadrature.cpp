#include "disksharp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace disksharp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 15-point Kronrod rule with its embedded 7-point Gauss rule (QUADPACK dqk15).
// Nodes are given for the positive half of [-1, 1]; index 7 is the center.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxPanels = 250000;

struct Panel {
  double a, b;
  double value;
  double err;
  int depth;
};

bool panel_less(const Panel& l, const Panel& r) { return l.err < r.err; }

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int depth,
                     long& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double res_kronrod = kKronrodWeights[7] * fc;
  double res_gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double fsum = f(center - dx) + f(center + dx);
    res_kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) res_gauss += kGaussWeights[j / 2] * fsum;
  }
  evaluations += 15;
  const double value = res_kronrod * half;
  if (!std::isfinite(value)) throw std::domain_error("integrate: integrand is not finite");
  return {a, b, value, std::abs(res_kronrod - res_gauss) * half, depth};
}

QuadResult run_adaptive(const std::function<double(double)>& f,
                        const std::vector<std::pair<double, double>>& segments, double tol) {
  long evaluations = 0;
  std::vector<Panel> heap;
  heap.reserve(64);
  double total_err = 0.0;
  for (const auto& [a, b] : segments) {
    Panel p = evaluate_panel(f, a, b, 0, evaluations);
    total_err += p.err;
    heap.push_back(p);
  }
  std::make_heap(heap.begin(), heap.end(), panel_less);

  while (total_err > tol) {
    const Panel worst = heap.front();
    if (worst.err <= 0.0) break;
    if (worst.depth >= kMaxDepth)
      throw convergence_error("integrate: subdivision depth limit reached before meeting tolerance");
    if (heap.size() >= kMaxPanels)
      throw convergence_error("integrate: panel budget exhausted before meeting tolerance");
    std::pop_heap(heap.begin(), heap.end(), panel_less);
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1, evaluations);
    Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1, evaluations);
    total_err += left.err + right.err - worst.err;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), panel_less);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), panel_less);
  }

  // Fresh sums over the final partition avoid incremental drift.
  double value = 0.0;
  double err = 0.0;
  for (const Panel& p : heap) {
    value += p.value;
    err += p.err;
  }
  return {value, err, evaluations};
}

double wrap_two_pi(double angle) {
  double x = std::fmod(angle, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

}  // namespace

KinkSet::KinkSet(std::initializer_list<double> angles) {
  for (double a : angles) add(a);
}

void KinkSet::add(double angle) {
  double x = wrap_two_pi(angle);
  constexpr double kDedup = 1e-12;
  if (x >= kTwoPi - kDedup) x = 0.0;
  const auto near = [&](double y) {
    const double d = std::abs(x - y);
    return std::min(d, kTwoPi - d) <= kDedup;  // distance on the circle
  };
  auto it = std::lower_bound(locations_.begin(), locations_.end(), x);
  if (it != locations_.end() && near(*it)) return;
  if (it != locations_.begin() && near(*(it - 1))) return;
  if (!locations_.empty() && (near(locations_.front()) || near(locations_.back()))) return;
  locations_.insert(it, x);
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate: bounds must be finite");
  return run_adaptive(f, {{a, b}}, tol);
}

QuadResult integrate_periodic(const std::function<double(double)>& f, const KinkSet& kinks,
                              double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_periodic: requires tol > 0");
  std::vector<std::pair<double, double>> segments;
  const auto& ks = kinks.locations();
  if (ks.empty()) {
    segments.emplace_back(0.0, kTwoPi);
  } else {
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) segments.emplace_back(ks[i], ks[i + 1]);
    segments.emplace_back(ks.back(), ks.front() + kTwoPi);
  }
  // Drop zero-width segments (duplicate kinks survive only across the seam).
  std::erase_if(segments, [](const auto& s) { return !(s.second - s.first > 1e-12); });
  if (segments.empty()) segments.emplace_back(0.0, kTwoPi);
  return run_adaptive(f, segments, tol);
}

QuadResult integrate_periodic_scaled(const std::function<double(double)>& f, const KinkSet& kinks,
                                     double rel_tol) {
  // Crude magnitude pilot: |f| on a uniform grid. Underestimates only cost
  // extra refinement, never accuracy.
  constexpr int kPilot = 64;
  double mag = 0.0;
  for (int i = 0; i < kPilot; ++i) {
    const double s = kTwoPi * (i + 0.5) / kPilot;
    mag += std::abs(f(s));
  }
  mag *= kTwoPi / kPilot;
  return integrate_periodic(f, kinks, rel_tol * std::max(1.0, mag));
}

}  // namespace disksharp
