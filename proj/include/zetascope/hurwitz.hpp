#pragma once

#include <cmath>
#include <complex>

#include "bernoulli.hpp"
#include "rational.hpp"

namespace zetascope {

// First-order dual number over complex doubles; carries d/ds through the
// Euler-Maclaurin formula so zeta_H and its s-derivative come out together.
struct DualC {
  cplx v{0.0, 0.0};
  cplx d{0.0, 0.0};

  DualC() = default;
  DualC(cplx value, cplx deriv = cplx(0)) : v(value), d(deriv) {}
  static DualC variable(cplx value) { return DualC(value, cplx(1)); }
};

inline DualC operator+(const DualC& a, const DualC& b) { return {a.v + b.v, a.d + b.d}; }
inline DualC operator-(const DualC& a, const DualC& b) { return {a.v - b.v, a.d - b.d}; }
inline DualC operator*(const DualC& a, const DualC& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline DualC operator/(const DualC& a, const DualC& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
inline DualC operator*(const cplx& c, const DualC& a) { return {c * a.v, c * a.d}; }
inline DualC operator+(const cplx& c, const DualC& a) { return {c + a.v, a.d}; }
inline DualC operator-(const cplx& c, const DualC& a) { return {c - a.v, -a.d}; }

// base^e for constant base and dual exponent, principal branch.
inline DualC pow_dual(const cplx& base, const DualC& e) {
  cplx lg = std::log(base);
  cplx val = std::exp(e.v * lg);
  return {val, e.d * lg * val};
}

struct HurwitzResult {
  cplx value;
  cplx deriv;  // d/ds
};

// Hurwitz zeta  zeta_H(s, q) = sum_{k>=0} (q+k)^{-s}  by Euler-Maclaurin,
// with the argument shifted until Re(q)+N reaches the accuracy threshold.
// q must avoid the nonpositive real axis. Target: ~1e-12 relative.
inline HurwitzResult hurwitz_zeta_with_deriv(cplx s0, cplx q) {
  const double shift_threshold = 12.0;
  const int bernoulli_order = 15;  // uses B_2 .. B_30
  const auto& bern = bernoulli_numbers();

  int N = 0;
  if (q.real() + N < shift_threshold)
    N = static_cast<int>(std::ceil(shift_threshold - q.real()));

  DualC s = DualC::variable(s0);
  DualC acc(cplx(0));
  for (int k = 0; k < N; ++k) acc = acc + pow_dual(q + cplx(k), cplx(0) - s);

  cplx a = q + cplx(N);
  // a^{1-s}/(s-1): at s=1 the series itself has the pole; callers stay away.
  acc = acc + pow_dual(a, cplx(1) - s) / (s - cplx(1));
  acc = acc + 0.5 * pow_dual(a, cplx(0) - s);

  DualC poch(cplx(1));  // s (s+1) ... (s+2j-2)
  for (int j = 1; j <= bernoulli_order; ++j) {
    poch = poch * (s + cplx(2 * j - 2));
    if (j > 1) poch = poch * (s + cplx(2 * j - 3));
    Rat factor = bern[2 * j];
    Rat fact(1);
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    double coef = to_double(factor / fact);
    acc = acc + coef * (poch * pow_dual(a, cplx(1 - 2 * j) - s));
  }
  return {acc.v, acc.d};
}

inline cplx hurwitz_zeta(cplx s, cplx q) { return hurwitz_zeta_with_deriv(s, q).value; }

}  // namespace zetascope
