#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"
#include "space.hpp"

namespace zetascope {

// Irreducible M-type by highest weight on the Cartan of m (embedded in h*,
// a*-component zero), plus the lift-integrality sign eps_alpha.
struct MType {
  SpacePreset space;
  Weight mu;          // cartan_rank coordinates, orthogonal to a_unit
  Rat eps_alpha;      // 0 or 1/2
  std::string label;
};

struct WeylPolynomial {
  Poly P;  // dimension polynomial along the lattice
  Poly Q;  // P = lambda * Q
};

struct LatticeSpec {
  Rat T;
  Rat eps;          // 0 or 1/2; lattice is T(Z + eps)
  Rat lower_bound;  // dominance bound Phi(sigma)
};

namespace detail {

// eps_alpha from weight integrality of lifts mu + x * a_unit (see per-family
// derivations in the tests); returns a value in {0, 1/2}.
inline Rat eps_alpha_for(const SpacePreset& s, const Weight& mu) {
  if (static_cast<int>(mu.size()) != s.cartan_rank)
    throw input_error("mu_sigma has wrong length for " + s.code());
  Rat e(0);
  switch (s.family) {
    case Family::RealH:
      // integral weights lift with integer a-coordinate, spin weights with half-integer
      e = (s.cartan_rank > 1) ? frac_mod1(mu[1]) : Rat(0);
      break;
    case Family::ComplexH:
      e = (s.cartan_rank > 2) ? frac_mod1(mu[2] - mu[0]) : Rat(0);
      break;
    case Family::QuaternionicH:
      e = frac_mod1(mu[0]);
      break;
    case Family::CayleyH:
      e = frac_mod1(2 * mu[1]);
      break;
  }
  if (e != 0 && e != Rat(1, 2)) throw input_error("weight does not lift with eps_alpha in {0,1/2}");
  return e;
}

inline void check_valid(const MType& sigma) {
  const auto& s = sigma.space;
  if (static_cast<int>(sigma.mu.size()) != s.cartan_rank)
    throw input_error("mu_sigma has wrong length for " + s.code());
  if (s.form(sigma.mu, s.a_unit) != 0)
    throw input_error("mu_sigma must be orthogonal to a*");
  if (sigma.eps_alpha != 0 && sigma.eps_alpha != Rat(1, 2))
    throw input_error("eps_alpha must be 0 or 1/2");
  for (const auto& beta : s.pos_roots)
    if (s.restriction(beta) == 0 && s.form(sigma.mu, beta) < 0)
      throw input_error("mu_sigma is not dominant for the m-positive roots");
}

}  // namespace detail

inline MType make_mtype(const SpacePreset& s, Weight mu, std::string label = "",
                        std::optional<Rat> eps_alpha = std::nullopt) {
  MType sigma{s, std::move(mu), Rat(0), std::move(label)};
  sigma.eps_alpha = eps_alpha ? *eps_alpha : detail::eps_alpha_for(s, sigma.mu);
  detail::check_valid(sigma);
  return sigma;
}

// --- catalog -----------------------------------------------------------------

inline MType trivial_sigma(const SpacePreset& s) {
  return make_mtype(s, Weight(s.cartan_rank, Rat(0)), "trivial");
}

// RealH: sigma^p = Lambda^p of the SO(2m-1) vector representation, p <= m-1.
inline MType real_forms_sigma(const SpacePreset& s, int p) {
  if (s.family != Family::RealH) throw input_error("forms sigma needs a RealH space");
  int m = s.rank_param;
  if (p < 0 || p > m - 1) throw input_error("forms sigma needs 0 <= p <= m-1");
  Weight mu(m, Rat(0));
  for (int i = 1; i <= p; ++i) mu[i] = 1;
  return make_mtype(s, std::move(mu), "sigma^" + std::to_string(p));
}

// RealH: spinor of Spin(2m-1).
inline MType real_spinor_sigma(const SpacePreset& s) {
  if (s.family != Family::RealH) throw input_error("spinor sigma needs a RealH space");
  Weight mu(s.rank_param, Rat(1, 2));
  mu[0] = 0;
  // The half-integral lift sign; for m=1 the t-weight is empty and cannot
  // determine it, so it is fixed explicitly for the whole family.
  return make_mtype(s, std::move(mu), "spinor", Rat(1, 2));
}

// ComplexH: Lambda_M^{p,q}, p+q <= n-1.
inline MType complex_pq_sigma(const SpacePreset& s, int p, int q) {
  if (s.family != Family::ComplexH) throw input_error("pq sigma needs a ComplexH space");
  int n = s.rank_param;
  if (p < 0 || q < 0 || p + q > n - 1) throw input_error("pq sigma needs p,q >= 0, p+q <= n-1");
  Weight mu(n + 1, Rat(0));
  mu[0] = mu[1] = Rat(q - p, 2);
  for (int i = 0; i < p; ++i) mu[2 + i] = 1;
  for (int i = 0; i < q; ++i) mu[n - i] = -1;
  return make_mtype(s, std::move(mu), "Lambda^{" + std::to_string(p) + "," + std::to_string(q) + "}");
}

// ComplexH, n odd: the half-determinant type ("k/2").
inline MType complex_halfk_sigma(const SpacePreset& s) {
  if (s.family != Family::ComplexH || s.rank_param % 2 == 0)
    throw input_error("halfk sigma needs ComplexH with odd n");
  int n = s.rank_param;
  Weight mu(n + 1, Rat(-1, 2));
  mu[0] = mu[1] = Rat(n - 1, 4);
  return make_mtype(s, std::move(mu), "halfk");
}

// QuaternionicH: sigma^1 (standard Sp(n-1) x standard Sp(1) on n_alpha).
inline MType quaternionic_sigma1(const SpacePreset& s) {
  if (s.family != Family::QuaternionicH) throw input_error("sigma1 needs a QuaternionicH space");
  Weight mu(s.cartan_rank, Rat(0));
  mu[0] = Rat(1, 2);
  mu[1] = Rat(-1, 2);
  if (s.cartan_rank > 2) mu[2] = 1;
  return make_mtype(s, std::move(mu), "sigma1");
}

// QuaternionicH: sigma' (adjoint Sp(1) on n_{2alpha}).
inline MType quaternionic_sigma_prime(const SpacePreset& s) {
  if (s.family != Family::QuaternionicH) throw input_error("sigmaprime needs a QuaternionicH space");
  Weight mu(s.cartan_rank, Rat(0));
  mu[0] = 1;
  mu[1] = -1;
  return make_mtype(s, std::move(mu), "sigmaprime");
}

// CayleyH types: vector, 2-form, spinor of the Spin(7) centralizer.
inline MType cayley_sigma(const SpacePreset& s, const std::string& which) {
  if (s.family != Family::CayleyH) throw input_error(which + " needs the Cayley space");
  if (which == "sigma1")
    return make_mtype(s, {Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)}, "sigma1");
  if (which == "sigma2") return make_mtype(s, {Rat(1), Rat(0), Rat(0), Rat(-1)}, "sigma2");
  if (which == "s7")
    return make_mtype(s, {Rat(3, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)}, "s7");
  throw input_error("unknown Cayley sigma: " + which);
}

// CLI/catalog label parser: trivial | forms:p=K | dirac | pq:P,Q | halfk |
// sigma1 | sigmaprime | sigma2 | s7.
inline MType sigma_from_label(const SpacePreset& s, const std::string& label) {
  if (label == "trivial") return trivial_sigma(s);
  if (label.rfind("forms:p=", 0) == 0) return real_forms_sigma(s, std::stoi(label.substr(8)));
  if (label == "dirac" || label == "spinor") return real_spinor_sigma(s);
  if (label.rfind("pq:", 0) == 0) {
    auto comma = label.find(',', 3);
    if (comma == std::string::npos) throw input_error("pq sigma needs pq:p,q");
    return complex_pq_sigma(s, std::stoi(label.substr(3, comma - 3)), std::stoi(label.substr(comma + 1)));
  }
  if (label == "halfk") return complex_halfk_sigma(s);
  if (label == "sigma1")
    return s.family == Family::CayleyH ? cayley_sigma(s, "sigma1") : quaternionic_sigma1(s);
  if (label == "sigmaprime") return quaternionic_sigma_prime(s);
  if (label == "sigma2" || label == "s7") return cayley_sigma(s, label);
  throw input_error("unknown sigma label: " + label);
}

// --- constants ---------------------------------------------------------------

// c(sigma) = |rho|^2 + |rho_m|^2 - |mu + rho_m|^2 = |delta|^2 - |mu + rho_m|^2.
inline Rat shift_constant(const MType& sigma) {
  detail::check_valid(sigma);
  const auto& s = sigma.space;
  Weight shifted(s.cartan_rank);
  for (int i = 0; i < s.cartan_rank; ++i) shifted[i] = sigma.mu[i] + s.rho_m[i];
  return s.form(s.delta, s.delta) - s.form(shifted, shifted);
}

inline LatticeSpec lattice_of(const MType& sigma) {
  detail::check_valid(sigma);
  const auto& s = sigma.space;
  Rat eps = frac_mod1(s.rho / s.T + sigma.eps_alpha);
  if (eps != 0 && eps != Rat(1, 2))
    throw input_error("rho/T + eps_alpha is not congruent to 0 or 1/2");
  // Dominance bound: max over restricted roots of |a| * Phi_a(sigma), plus rho.
  Rat best(0);
  for (const auto& beta : s.pos_roots) {
    Rat r = s.restriction(beta);
    if (r == 0) continue;
    // |alpha| Phi_alpha contribution: r is |alpha| for this root's restriction class,
    // (alpha,alpha) = r^2, so |alpha| * (mu,beta)/(alpha,alpha) = (mu,beta)/r.
    Rat contrib = s.form(sigma.mu, beta) / r;
    if (contrib > best) best = contrib;
  }
  return {s.T, eps, best + s.rho};
}

inline WeylPolynomial weyl_polynomial(const MType& sigma) {
  detail::check_valid(sigma);
  const auto& s = sigma.space;
  Weight shifted(s.cartan_rank);
  for (int i = 0; i < s.cartan_rank; ++i) shifted[i] = sigma.mu[i] + s.rho_m[i];
  Poly P = Poly::constant(Rat(1));
  for (const auto& beta : s.pos_roots) {
    Rat a = s.form(s.a_unit, beta);
    Rat b = s.form(shifted, beta);
    Rat d = s.form(s.delta, beta);
    if (d == 0) throw input_error("internal: vanishing (delta, beta) pairing");
    P = P * Poly::linear(a / d, b / d);
  }
  for (int k = 0; k <= P.degree(); k += 2)
    if (P.coeff(k) != 0) throw input_error("internal: Weyl polynomial is not odd");
  return {P, P.divide_by_x()};
}

// dim sigma by the Weyl dimension formula over the m-positive roots.
inline Rat dim_sigma(const MType& sigma) {
  const auto& s = sigma.space;
  Weight shifted(s.cartan_rank);
  for (int i = 0; i < s.cartan_rank; ++i) shifted[i] = sigma.mu[i] + s.rho_m[i];
  Rat d(1);
  for (const auto& beta : s.pos_roots) {
    if (s.restriction(beta) != 0) continue;
    d *= s.form(shifted, beta) / s.form(s.rho_m, beta);
  }
  return d;
}

}  // namespace zetascope
