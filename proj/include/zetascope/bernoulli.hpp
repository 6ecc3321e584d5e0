#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace zetascope {

// Bernoulli numbers with B_1 = -1/2, computed once up to the requested index.
inline const std::vector<Rat>& bernoulli_numbers(int up_to = 32) {
  static std::vector<Rat> cache = [] {
    const int n_max = 40;
    std::vector<Rat> b(n_max + 1, Rat(0));
    std::vector<std::vector<BigInt>> choose(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) {
      choose[n].resize(n + 1);
      choose[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        choose[n][k] = (k == n) ? BigInt(1) : choose[n - 1][k - 1] + choose[n - 1][k];
    }
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
      Rat s(0);
      for (int k = 0; k < n; ++k) s += Rat(choose[n + 1][k]) * b[k];
      b[n] = -s / Rat(choose[n + 1][n]);
    }
    return b;
  }();
  (void)up_to;
  return cache;
}

inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat r(1);
  for (long i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  return r;
}

// Bernoulli polynomial value B_n(x), exact.
inline Rat bernoulli_poly(int n, const Rat& x) {
  const auto& b = bernoulli_numbers();
  Rat result(0), pw(1);
  // sum_k C(n,k) B_{n-k} x^k
  for (int k = 0; k <= n; ++k) {
    result += binomial(n, k) * b[n - k] * pw;
    pw *= x;
  }
  return result;
}

// Hurwitz zeta at nonpositive integers: zeta_H(-n, q) = -B_{n+1}(q)/(n+1).
inline Rat hurwitz_zeta_neg_int(int n, const Rat& q) {
  return -bernoulli_poly(n + 1, q) / Rat(n + 1);
}

}  // namespace zetascope
