#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dual.hpp"
#include "geodesics.hpp"

namespace zetascope {

struct SpectralDatum {
  struct Entry {
    cplx lambda;  // real >= 0, or purely imaginary with Im > 0
    long mult = 0;
  };
  std::vector<Entry> entries;

  void validate() const {
    for (const auto& e : entries) {
      bool real_ok = std::abs(e.lambda.imag()) < 1e-12 && e.lambda.real() >= -1e-12;
      bool imag_ok = std::abs(e.lambda.real()) < 1e-12 && e.lambda.imag() > 0;
      if (!real_ok && !imag_ok)
        throw input_error("spectral parameter must be real >= 0 or purely imaginary, Im > 0");
    }
  }
};

enum class Provenance { spectral, dual_topological, combined };

inline std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::spectral: return "spectral";
    case Provenance::dual_topological: return "dual_topological";
    case Provenance::combined: return "combined";
  }
  return "?";
}

struct DivisorPoint {
  cplx location;
  long order = 0;
  Provenance provenance = Provenance::spectral;
};

struct Divisor {
  std::vector<DivisorPoint> points;

  long total_order() const {
    long sum = 0;
    for (const auto& p : points) sum += p.order;
    return sum;
  }
};

struct TruncatedValue {
  cplx value;
  double tail_bound = 0;
};

struct Window {
  double re_min, re_max, im_min, im_max;
  bool contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

namespace detail {

// rigorous tail bound for the class sum beyond the cutoff: term size
// 2*Cc*l*exp((rho-Re p)l), class count per unit length A*exp(2 rho N)
inline double class_sum_tail(const LengthSpectrum& spectrum, const MType& sigma, double re_p) {
  double rho = to_double(sigma.space.rho);
  if (spectrum.classes.empty()) return 0.0;
  double Cc = 0.0;
  double A = 1.0;
  for (const auto& g : spectrum.classes) {
    double c = std::abs(contribution(g, sigma)) * std::exp(rho * g.length) / g.length;
    Cc = std::max(Cc, c);
  }
  long seen = 0;
  for (const auto& g : spectrum.classes) {
    ++seen;
    A = std::max(A, seen / std::exp(2 * rho * g.length));
  }
  A *= 4.0;  // safety factor over the empirical counting constant
  double L = spectrum.cutoff_L;
  double rate = re_p + rho - 2 * rho;  // decay of (count density) x (term size)
  if (rate <= 0) return std::numeric_limits<double>::infinity();
  double tail = 0.0;
  for (int j = 0; j < 400; ++j) {
    double N = L + j;
    double piece = A * std::exp(2 * rho * (N + 1)) * 2 * Cc * (N + 1) * std::exp(-(re_p + rho) * N);
    tail += piece;
    if (piece < 1e-300) break;
  }
  return tail;
}

}  // namespace detail

// Logarithmic derivative of the Selberg zeta function as a class sum:
// D(p) = sum over classes of 2 C(g) exp(-p l(g)) / n_gamma(g).
inline TruncatedValue log_derivative(cplx p, const LengthSpectrum& spectrum, const MType& sigma,
                                     bool force = false) {
  double rho = to_double(sigma.space.rho);
  if (!force && p.real() <= rho)
    throw input_error("log_derivative requires Re(p) > rho (pass force to override)");
  TruncatedValue out;
  for (const auto& g : spectrum.classes)
    out.value += 2.0 * contribution(g, sigma) * std::exp(-p * g.length) /
                 static_cast<double>(g.n_gamma);
  out.tail_bound = detail::class_sum_tail(spectrum, sigma, p.real());
  return out;
}

namespace detail {

// eigenvalues of Ad(ma)^{-1} on the expanding nilpotent for one class
inline std::vector<cplx> contracting_eigenvalues(const GeodesicClass& g) {
  std::vector<cplx> mu;
  for (double th : g.holonomy_alpha)
    mu.push_back(std::exp(-g.length) * cplx(std::cos(th), -std::sin(th)));
  for (double th : g.holonomy_two_alpha)
    mu.push_back(std::exp(-2 * g.length) * cplx(std::cos(th), -std::sin(th)));
  return mu;
}

// complete homogeneous symmetric polynomial h_k of the j-th powers
inline cplx complete_homogeneous(const std::vector<cplx>& mu, long j, int k) {
  std::vector<cplx> h(k + 1, cplx(0.0));
  h[0] = 1.0;
  for (cplx m : mu) {
    cplx x = std::pow(m, static_cast<double>(j));
    // h <- h * 1/(1 - x t) truncated at degree k
    for (int d = 1; d <= k; ++d) h[d] += x * h[d - 1];
  }
  return h[k];
}

inline double tr_sigma_power(const GeodesicClass& g, const MType& sigma, long j) {
  if (g.tr_sigma && sigma.label != "trivial" && j > 1)
    throw capability_error("powers of a supplied tr_sigma are not determined; supply holonomy");
  GeodesicClass gj = g;
  gj.tr_sigma.reset();
  if (sigma.label == "trivial") return 1.0;
  for (auto& th : gj.holonomy_alpha) th *= j;
  for (auto& th : gj.holonomy_two_alpha) th *= j;
  return geodesic_tr_sigma(gj, sigma);
}

}  // namespace detail

// Natural logarithm of the truncated Selberg Euler product over primitive
// classes: sum over symmetric-power factors via the power-trace expansion.
// Powers j of each primitive are kept while j*l <= cutoff_L, matching the
// class content of the truncated spectrum.
inline TruncatedValue ln_euler_product(cplx s, const LengthSpectrum& spectrum, const MType& sigma,
                                       int k_max = -1, bool force = false) {
  double rho = to_double(sigma.space.rho);
  if (!force && s.real() <= rho)
    throw input_error("euler_product requires Re(s) > rho (pass force to override)");
  TruncatedValue out;
  double k_tail = 0.0;
  for (const auto& g : spectrum.classes) {
    if (!g.primitive) continue;
    auto mu = detail::contracting_eigenvalues(g);
    int kk = k_max >= 0 ? k_max : static_cast<int>(40.0 / g.length) + 8;
    for (int k = 0; k <= kk; ++k) {
      cplx acc{};
      for (long j = 1; j * g.length <= spectrum.cutoff_L + 1e-9; ++j) {
        cplx cj = std::exp(-(s + rho) * (g.length * j));
        cplx term = -cj / static_cast<double>(j) * detail::complete_homogeneous(mu, j, k) *
                    detail::tr_sigma_power(g, sigma, j);
        acc += term;
        if (std::abs(term) < 1e-18 && j > 2) break;
      }
      out.value += acc;
      if (k == kk)
        k_tail += std::abs(acc) / std::max(1e-300, 1.0 - std::exp(-g.length));
    }
  }
  out.tail_bound = detail::class_sum_tail(spectrum, sigma, s.real()) + k_tail;
  return out;
}

inline TruncatedValue euler_product(cplx s, const LengthSpectrum& spectrum, const MType& sigma,
                                    int k_max = -1, bool force = false) {
  auto ln = ln_euler_product(s, spectrum, sigma, k_max, force);
  return {std::exp(ln.value), ln.tail_bound * std::abs(std::exp(ln.value))};
}

// Exponential side of the Selberg functional equation: the Plancherel-type
// integral along a pole-avoiding contour, certified by offset agreement.
inline cplx functional_equation_rhs(cplx s, const MType& sigma, long chi_M, double delta = -1.0,
                                    double agreement_tol = 1e-9) {
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  double T = to_double(lat.T);
  bool half = (lat.eps != 0);
  if (delta < 0) delta = 1e-3 * T;
  long chi_d = sigma.space.chi_dual;
  if (chi_M % chi_d != 0)
    throw input_error("chi_M must be divisible by the dual Euler characteristic");
  double ratio = static_cast<double>(chi_M) / chi_d;

  auto integrand = [&](cplx p) -> cplx {
    cplx trig = half ? std::tan(std::numbers::pi * p / T)
                     : -1.0 / std::tan(std::numbers::pi * p / T);
    return p * wp.Q.eval(p) * trig;
  };
  auto path_integral = [&](double d) {
    cplx lift{0.0, d};
    cplx total = quad::integrate_segment(integrand, cplx(0.0), lift, 4, 24);
    total += quad::integrate_segment(integrand, lift, s + lift, 64, 32);
    total += quad::integrate_segment(integrand, s + lift, s, 8, 32);
    return total;
  };
  cplx i1 = path_integral(delta);
  cplx i2 = path_integral(2 * delta);
  if (std::abs(i1 - i2) > agreement_tol * std::max(1.0, std::abs(i1)))
    throw tolerance_error("functional-equation contour offsets disagree");
  return std::exp(-ratio * (2.0 * std::numbers::pi / T) * i1);
}

// Divisor of the Selberg zeta function in a window: spectral points at +/- i
// lambda and topological points on the negative real lattice.
inline Divisor selberg_divisor(const SpectralDatum& spectral, const MType& sigma, long chi_M,
                               const Window& window) {
  spectral.validate();
  long chi_d = sigma.space.chi_dual;
  if (chi_M % chi_d != 0)
    throw input_error("chi_M must be divisible by the dual Euler characteristic");
  long ratio = chi_M / chi_d;

  std::vector<DivisorPoint> raw;
  const cplx i_unit{0.0, 1.0};
  for (const auto& e : spectral.entries) {
    raw.push_back({i_unit * e.lambda, e.mult, Provenance::spectral});
    raw.push_back({-i_unit * e.lambda, e.mult, Provenance::spectral});
  }
  DualSpectrum dual(sigma);
  double reach = std::max(std::abs(window.re_min), std::abs(window.re_max)) + 1.0;
  for (const auto& e : dual.entries(reach)) {
    Rat order = Rat(-2 * ratio) * e.mult;
    if (!is_integer(order))
      throw input_error("non-integer divisor order: inconsistent chi inputs");
    raw.push_back({cplx(-to_double(e.lambda)), to_long_exact(order), Provenance::dual_topological});
  }

  Divisor out;
  for (const auto& p : raw) {
    if (!window.contains(p.location)) continue;
    bool merged = false;
    for (auto& q : out.points)
      if (std::abs(q.location - p.location) < 1e-9) {
        q.order += p.order;
        if (q.provenance != p.provenance) q.provenance = Provenance::combined;
        merged = true;
        break;
      }
    if (!merged) out.points.push_back(p);
  }
  std::erase_if(out.points, [](const DivisorPoint& p) { return p.order == 0; });
  std::sort(out.points.begin(), out.points.end(), [](const DivisorPoint& a, const DivisorPoint& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

struct ThetaResidue {
  cplx location;
  double residue;
};

// Residues of the geometric theta function at +/- i l(g).
inline std::vector<ThetaResidue> theta_residues(const LengthSpectrum& spectrum, const MType& sigma) {
  std::vector<ThetaResidue> out;
  for (const auto& g : spectrum.classes) {
    double r = contribution(g, sigma) / (std::numbers::pi * g.n_gamma);
    out.push_back({cplx(0.0, g.length), r});
    out.push_back({cplx(0.0, -g.length), r});
  }
  return out;
}

// Residual of the distributional trace formula against an even Gaussian probe.
// vol(M)/vol(X_d) defaults to (-1)^(n/2) chi_M / chi_d; a dual surrogate run
// passes side=dual and vol_ratio=1.
inline double trace_formula_residual(const LengthSpectrum& spectrum, const SpectralDatum& spectral,
                                     const GaussianProbe& phi, const MType& sigma,
                                     PairingSide side = PairingSide::noncompact,
                                     std::optional<double> vol_ratio = std::nullopt) {
  spectral.validate();
  if (spectrum.vol_M == 0 && !spectrum.classes.empty())
    throw input_error("trace formula requires vol_M");
  if (spectrum.vol_M == 0 && spectral.entries.empty() && !vol_ratio) return 0.0;

  double ratio;
  if (vol_ratio) {
    ratio = *vol_ratio;
  } else {
    int n = sigma.space.dim_real;
    double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    ratio = sign * static_cast<double>(spectrum.chi_M) / sigma.space.chi_dual;
  }

  double spectral_sum = 0.0;
  for (const auto& e : spectral.entries) {
    if (std::abs(e.lambda.imag()) > 1e-12)
      throw capability_error("imaginary spectral parameters are outside the probe transform");
    spectral_sum += e.mult * phi.cosine_transform(e.lambda.real());
  }
  double pairing_term = ratio * k_pairing(phi, sigma, side);
  double geodesic_sum = 0.0;
  for (const auto& g : spectrum.classes)
    geodesic_sum += contribution(g, sigma) / g.n_gamma * 2.0 * phi.value(g.length);
  return std::abs(spectral_sum - pairing_term - geodesic_sum);
}

struct DeterminantRhs {
  cplx value;
  cplx dual_factor;      // det(A_d^2 - p^2) ^ (-chi_M/chi_d)
  cplx exp_factor;       // exponential of the Plancherel integral
  cplx m_side_factor{1.0};  // truncated det(p^2 + A_M^2), approximate
  bool approximate = false;
};

// Regularized-determinant representation of the Selberg zeta function.
inline DeterminantRhs selberg_determinant_rhs(cplx p, const MType& sigma, long chi_M,
                                              const SpectralDatum* spectral = nullptr) {
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  double T = to_double(lat.T);
  bool half = (lat.eps != 0);
  long chi_d = sigma.space.chi_dual;
  if (chi_M % chi_d != 0)
    throw input_error("chi_M must be divisible by the dual Euler characteristic");
  double ratio = static_cast<double>(chi_M) / chi_d;

  auto dp = dual_det(p, +1, sigma);
  auto dm = dual_det(p, -1, sigma);
  if (dp.lattice_hit || dm.lattice_hit)
    throw input_error("p^2 hits the dual spectrum; no order handling in the determinant form");

  // Voros-type correction restoring det(A_d^2 - p^2) from D+ D-:
  // exp(-sum_m c_{-m} H_{m-1} p^{2m} / m!) with H_{m-1} the harmonic number
  auto hc = heat_coefficients(sigma, 0);
  cplx corr_exp{};
  Rat mfact = 1;
  double harmonic = 0.0;
  for (int m = 1; m <= sigma.space.dim_real / 2; ++m) {
    mfact *= m;
    corr_exp += -to_double(hc.c_coeffs.at(-m) / mfact) * harmonic * std::pow(p, 2.0 * m);
    harmonic += 1.0 / m;
  }
  cplx det_dual = dp.value * dm.value * std::exp(corr_exp);
  cplx dual_factor = std::pow(det_dual, -ratio);

  auto integrand = [&](cplx q) -> cplx {
    cplx trig = half ? std::tan(std::numbers::pi * q / T)
                     : -1.0 / std::tan(std::numbers::pi * q / T);
    return q * wp.Q.eval(q) * trig;
  };
  double delta = 1e-3 * T;
  cplx lift{0.0, delta};
  cplx integral = quad::integrate_segment(integrand, cplx(0.0), cplx(0.0) + lift, 4, 24);
  integral += quad::integrate_segment(integrand, cplx(0.0) + lift, p + lift, 64, 32);
  integral += quad::integrate_segment(integrand, p + lift, p, 8, 32);
  cplx exp_factor = std::exp(-ratio * (std::numbers::pi / T) * integral);

  DeterminantRhs out;
  out.dual_factor = dual_factor;
  out.exp_factor = exp_factor;
  if (spectral) {
    spectral->validate();
    cplx det_m{1.0};
    for (const auto& e : spectral->entries)
      det_m *= std::pow(p * p + e.lambda * e.lambda, static_cast<double>(e.mult));
    out.m_side_factor = det_m;
    out.approximate = true;
  }
  out.value = out.m_side_factor * dual_factor * exp_factor;
  return out;
}

// Partial-fraction identity: sum_i p_i^l prod_{j != i} 1/(p_j - p_i) vanishes
// for l <= N-2, over exact rationals.
inline Rat psi_combination_sum(const std::vector<Rat>& points, int l) {
  Rat sum = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    Rat term = 1;
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Rat d = points[j] - points[i];
      if (d == 0) throw input_error("points must be distinct");
      term /= d;
    }
    Rat pw = 1;
    for (int k = 0; k < l; ++k) pw *= points[i];
    sum += pw * term;
  }
  return sum;
}

}  // namespace zetascope
