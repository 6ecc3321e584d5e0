#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace zetascope::quad {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on P_n; cached per order.
inline const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Fixed-order composite Gauss-Legendre on [a, b].
template <typename F>
auto integrate(F&& f, double a, double b, int panels = 8, int order = 24)
    -> decltype(f(0.0) * 0.0) {
  const auto& rule = gauss_legendre(order);
  decltype(f(0.0) * 0.0) total{};
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    for (int i = 0; i < order; ++i)
      total += rule.weights[i] * f(lo + 0.5 * h * (rule.nodes[i] + 1.0)) * (0.5 * h);
  }
  return total;
}

// Panel-doubling Gauss-Legendre with an absolute tolerance.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double tol = 1e-12, int order = 24,
                        int max_panels = 4096) -> decltype(f(0.0) * 0.0) {
  auto prev = integrate(f, a, b, 1, order);
  for (int panels = 2; panels <= max_panels; panels *= 2) {
    auto cur = integrate(f, a, b, panels, order);
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw tolerance_error("quadrature did not converge to the requested tolerance");
}

// Straight-segment contour integral of a complex function.
template <typename F>
cplx integrate_segment(F&& f, cplx a, cplx b, int panels = 8, int order = 24) {
  cplx dir = b - a;
  return dir * integrate([&](double t) { return f(a + t * dir); }, 0.0, 1.0, panels, order);
}

// Integral of psi(t) * ln(t) over (0, a] for smooth psi, via t = exp(-x).
template <typename F>
double integrate_log_weighted(F&& psi, double a, double tol = 1e-12) {
  // becomes -x * psi(e^-x) * e^-x on [ -ln a, inf ); tail decays like e^-x.
  double x0 = -std::log(a);
  double total = 0.0;
  double lo = x0;
  for (int block = 0; block < 80; ++block) {
    double hi = lo + 4.0;
    double piece = integrate(
        [&](double x) { return -x * psi(std::exp(-x)) * std::exp(-x); }, lo, hi, 4, 32);
    total += piece;
    if (std::abs(piece) < tol && block > 1) return total;
    lo = hi;
  }
  throw tolerance_error("logarithmic quadrature tail did not converge");
}

// Derivative of an analytic function by the trapezoid rule on a circle,
// which is spectrally accurate for contour integrals of periodic integrands.
template <typename F>
cplx cauchy_derivative(F&& f, cplx s0, double radius, int points = 64) {
  cplx sum{};
  for (int k = 0; k < points; ++k) {
    double th = 2.0 * std::numbers::pi * k / points;
    cplx e{std::cos(th), std::sin(th)};
    sum += f(s0 + radius * e) / e;
  }
  return sum / (static_cast<double>(points) * radius);
}

}  // namespace zetascope::quad
