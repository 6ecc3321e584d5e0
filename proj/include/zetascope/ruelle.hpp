#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "mtype.hpp"
#include "quadrature.hpp"
#include "selberg.hpp"

namespace zetascope {

// One summand of Lambda^p n^c = sum V_sigma (x) C_chi; chi is the a*-weight
// in alpha-units.
struct IpEntry {
  MType sigma;
  Rat chi;
};

struct IpTable {
  SpacePreset space;
  std::vector<std::vector<IpEntry>> rows;  // rows[p] describes Lambda^p n^c
};

namespace detail {

// Lambda^p V (x) Lambda^q Vbar of the (n-1)-dim complex standard
// representation is reducible; the Lefschetz decomposition expresses it as the
// primitive types Lambda^{p-j, q-j} for j up to min(p, q).
inline void complex_pq_content(const SpacePreset& s, int p, int q, const Rat& chi,
                               std::vector<IpEntry>& out) {
  int r = s.rank_param - 1;
  for (int j = std::max(0, p + q - r); j <= std::min(p, q); ++j)
    out.push_back({complex_pq_sigma(s, p - j, q - j), chi});
}

}  // namespace detail

// Checks the structural invariants of an I_p table: alternating dimensions
// telescope to zero, rows pair under duality with chi -> 2 rho - chi, and
// every entry satisfies T eps(sigma) + chi + rho in T Z.
inline void validate_ip_table(const IpTable& table) {
  const auto& s = table.space;
  bool complete = static_cast<int>(table.rows.size()) == s.dim_real;
  Rat alt(0);
  for (size_t p = 0; p < table.rows.size(); ++p) {
    Rat row_dim(0);
    for (const auto& e : table.rows[p]) {
      row_dim += dim_sigma(e.sigma);
      auto lat = lattice_of(e.sigma);
      Rat q = (lat.T * lat.eps + e.chi + s.rho) / lat.T;
      if (denominator(q) != 1) throw input_error("I_p entry violates lattice compatibility");
    }
    alt += (p % 2 == 0 ? row_dim : -row_dim);
  }
  if (complete) {
    if (alt != 0) throw input_error("alternating dimension sum of I_p table is nonzero");
    for (size_t p = 0; p < table.rows.size(); ++p) {
      std::multiset<std::pair<std::string, Rat>> lo, hi;
      for (const auto& e : table.rows[p]) lo.insert({e.sigma.label, 2 * s.rho - e.chi});
      for (const auto& e : table.rows[table.rows.size() - 1 - p]) hi.insert({e.sigma.label, e.chi});
      if (lo != hi) throw input_error("I_p table violates Poincare duality");
    }
  }
}

// Decomposition of Lambda^p n^c into M-types with their a*-weights.  Complete
// for the real and complex families; the quaternionic table stops at p = 1 and
// the Cayley case is not available.
inline IpTable ip_decomposition(const SpacePreset& s) {
  IpTable table{s, {}};
  switch (s.family) {
    case Family::RealH: {
      int m = s.rank_param;
      for (int p = 0; p <= 2 * m - 1; ++p)
        table.rows.push_back({{real_forms_sigma(s, std::min(p, 2 * m - 1 - p)), Rat(p)}});
      break;
    }
    case Family::ComplexH: {
      int n = s.rank_param;
      for (int k = 0; k <= 2 * n - 1; ++k) {
        std::vector<IpEntry> row;
        for (int p = std::min(k, n - 1); p >= 0; --p) {
          int q = k - p;
          if (q <= n - 1) detail::complex_pq_content(s, p, q, Rat(k), row);
        }
        for (int p = std::min(k - 1, n - 1); p >= 0; --p) {
          int q = k - 1 - p;
          if (q <= n - 1) detail::complex_pq_content(s, p, q, Rat(k + 1), row);
        }
        table.rows.push_back(std::move(row));
      }
      break;
    }
    case Family::QuaternionicH:
      table.rows.push_back({{trivial_sigma(s), Rat(0)}});
      table.rows.push_back({{quaternionic_sigma1(s), Rat(1)}, {quaternionic_sigma_prime(s), Rat(2)}});
      break;
    case Family::CayleyH:
      throw capability_error("I_p decomposition is not available for the Cayley plane");
  }
  validate_ip_table(table);
  return table;
}

// H(s) = sum_{p<dim/2} (-1)^p sum_{I_p} (P(s+(rho-chi)) - P(s-(rho-chi))),
// built in exact rational arithmetic.  It is a constant polynomial equal to
// (dim/2) chi(X_d).
inline Poly ruelle_h_polynomial(const IpTable& table) {
  const auto& s = table.space;
  if (static_cast<int>(table.rows.size()) < s.dim_real / 2)
    throw capability_error("H(s) needs I_p rows up to dim/2 - 1");
  Poly h;
  for (int p = 0; p < s.dim_real / 2; ++p)
    for (const auto& e : table.rows[p]) {
      Rat a = s.rho - e.chi;
      Poly diff = weyl_polynomial(e.sigma).P.compose_linear(Rat(1), a) -
                  weyl_polynomial(e.sigma).P.compose_linear(Rat(1), -a);
      h = (p % 2 == 0) ? h + diff : h - diff;
    }
  return h;
}

// Order of the singularity of the Ruelle zeta function at s = 0.
inline long ruelle_order_at_zero(const SpacePreset& s, long chi_M) { return (s.dim_real / 2) * chi_M; }

// Direct product over primitive classes, (1 - e^{-s l})^{-1}, with powers
// truncated at k l <= cutoff_L to match the class content of the spectrum.
inline TruncatedValue ruelle_direct(cplx s, const LengthSpectrum& spectrum, bool force = false) {
  double two_rho = 2 * to_double(spectrum.space.rho);
  if (!force && s.real() <= two_rho)
    throw input_error("ruelle_direct requires Re(s) > 2 rho (pass force to override)");
  cplx ln{};
  for (const auto& g : spectrum.classes) {
    if (!g.primitive) continue;
    for (long k = 1; k * g.length <= spectrum.cutoff_L + 1e-9; ++k)
      ln += std::exp(-s * (g.length * k)) / static_cast<double>(k);
  }
  double tail = detail::class_sum_tail(spectrum, trivial_sigma(spectrum.space),
                                       s.real() - to_double(spectrum.space.rho));
  return {std::exp(ln), tail * std::abs(std::exp(ln))};
}

// Shared cache of ln Z_S evaluations keyed by (sigma label, argument); the
// factorization revisits many (sigma, shift) pairs.
class RuelleCache {
 public:
  TruncatedValue ln_selberg(cplx s, const LengthSpectrum& spectrum, const MType& sigma,
                            bool force) {
    Key key{sigma.label, std::round(s.real() * 1e15), std::round(s.imag() * 1e15)};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    TruncatedValue v = ln_euler_product(s, spectrum, sigma, -1, force);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(key, v).first->second;
  }

 private:
  using Key = std::tuple<std::string, double, double>;
  std::map<Key, TruncatedValue> memo_;
  std::mutex mutex_;
};

// Ruelle zeta function via the Selberg factorization
// Z_R(s) = prod_p S(s,p)^{(-1)^p},  S(s,p) = prod_{I_p} Z_S(s + rho - chi, sigma).
inline TruncatedValue ruelle_eval(cplx s, const LengthSpectrum& spectrum,
                                  RuelleCache* cache = nullptr, bool force = false) {
  static RuelleCache shared;
  if (!cache) cache = &shared;
  const auto& space = spectrum.space;
  IpTable table = ip_decomposition(space);
  double two_rho = 2 * to_double(space.rho);
  if (!force && s.real() <= two_rho)
    throw input_error("ruelle_eval requires Re(s) > 2 rho (pass force to override)");
  cplx ln{};
  double tail = 0.0;
  for (size_t p = 0; p < table.rows.size(); ++p)
    for (const auto& e : table.rows[p]) {
      cplx arg = s + cplx(to_double(space.rho - e.chi));
      auto v = cache->ln_selberg(arg, spectrum, e.sigma, force || arg.real() <= to_double(space.rho));
      ln += (p % 2 == 0) ? v.value : -v.value;
      tail += v.tail_bound;
    }
  return {std::exp(ln), tail * std::abs(std::exp(ln))};
}

struct FunctionalCheck {
  cplx lhs;     // quadrature of the alternating I_p integrals
  double rhs;   // -(T dim / 2 pi) chi(X_d) ln|2 sin(pi s / T)|
};

// Functional-equation identity: the alternating sum over p < dim/2 of
// int_{s-(rho-chi)}^{s+(rho-chi)} P(r,sigma) {tan | -cot}(pi r / T) dr equals
// -(T dim / 2 pi) chi(X_d) ln|2 sin(pi s / T)| with vanishing constant term;
// the factor 2 inside the logarithm is what makes the constant zero (checked
// against principal-value quadrature at many sample points).  The contour is
// lifted off the real axis and certified by offset agreement.
inline FunctionalCheck ruelle_functional_check(cplx s, const SpacePreset& space,
                                               double delta = -1.0,
                                               double agreement_tol = 1e-9) {
  IpTable table = ip_decomposition(space);
  double T = to_double(space.T);
  if (delta <= 0) delta = 1e-3 * T;
  double pi = std::numbers::pi;

  auto lhs_at = [&](double d) {
    cplx total{};
    for (int p = 0; p < space.dim_real / 2; ++p)
      for (const auto& e : table.rows[p]) {
        Rat shift = space.rho - e.chi;
        if (shift == 0) continue;
        auto wp = weyl_polynomial(e.sigma);
        bool half = lattice_of(e.sigma).eps == Rat(1, 2);
        auto f = [&](cplx r) {
          cplx trig = half ? std::tan(pi * r / T) : -cplx(1) / std::tan(pi * r / T);
          return wp.P.eval(r) * trig;
        };
        cplx a = s - cplx(to_double(shift)), b = s + cplx(to_double(shift));
        cplx lift(0, d);
        // the horizontal leg passes within d of the real-axis poles; adaptive
        // panel doubling resolves the near-pole peak
        auto horizontal = [&](double t) { return f(a + lift + t * (b - a)) * (b - a); };
        cplx val = quad::integrate_segment(f, a, a + lift, 8, 32) +
                   quad::integrate_adaptive(horizontal, 0.0, 1.0, 1e-12, 24, 1 << 16) +
                   quad::integrate_segment(f, b + lift, b, 8, 32);
        total += (p % 2 == 0) ? val : -val;
      }
    return total;
  };

  cplx lhs = lhs_at(delta);
  if (std::abs(lhs - lhs_at(2 * delta)) > agreement_tol * (1.0 + std::abs(lhs)))
    throw tolerance_error("contour-offset agreement failed in ruelle_functional_check");
  double chi_d = space.chi_dual;
  double rhs =
      -(T * space.dim_real / (2 * pi)) * chi_d * std::log(std::abs(2.0 * std::sin(pi * s / T)));
  return {lhs, rhs};
}

}  // namespace zetascope
