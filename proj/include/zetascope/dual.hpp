#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "hurwitz.hpp"
#include "mtype.hpp"
#include "quadrature.hpp"

namespace zetascope {

// Rational function N(w) / (1 - w^2)^k with exact coefficients; closed under
// the operator D = d/dt acting through w = exp(-tT/2), i.e. D = -(T/2) w d/dw.
struct WExpansion {
  Poly num;
  int k = 0;

  static WExpansion base(const Rat& eps) {
    // geometric kernel of the lattice exponential sum: 1/(1-w^2) or w/(1-w^2)
    WExpansion e;
    e.k = 1;
    e.num = (eps == 0) ? Poly::constant(1) : Poly::linear(1, 0);
    return e;
  }

  WExpansion apply_D(const Rat& T) const {
    // d/dw [N/(1-w^2)^k] = [N'(1-w^2) + 2k w N] / (1-w^2)^(k+1)
    Poly one_minus_w2({Rat(1), Rat(0), Rat(-1)});
    Poly dnum = num.derivative() * one_minus_w2 + num * Poly::linear(2 * k, 0);
    WExpansion out;
    out.k = k + 1;
    out.num = (dnum * Poly::linear(1, 0)) * (-T / 2);  // times -(T/2) w
    return out;
  }

  WExpansion& operator+=(const WExpansion& o) {
    Poly one_minus_w2({Rat(1), Rat(0), Rat(-1)});
    Poly a = num, b = o.num;
    int kk = std::max(k, o.k);
    for (int i = k; i < kk; ++i) a = a * one_minus_w2;
    for (int i = o.k; i < kk; ++i) b = b * one_minus_w2;
    num = a + b;
    k = kk;
    return *this;
  }

  cplx eval(cplx w) const {
    cplx den = std::pow(cplx(1.0) - w * w, k);
    return num.eval(w) / den;
  }
};

struct ThetaValue {
  cplx value;
  bool pole_flag = false;
};

// Closed form of the dual theta function: sum over the positive half of the
// spectral lattice of P(lambda) exp(-lambda t), resummed as a rational
// function of w = exp(-tT/2).
class ThetaDual {
 public:
  explicit ThetaDual(const MType& sigma)
      : sigma_(sigma), lattice_(lattice_of(sigma)), wp_(weyl_polynomial(sigma)) {
    // theta = P(-d/dt) applied to the kernel; expand the operator power by power.
    WExpansion kernel = WExpansion::base(lattice_.eps);
    std::vector<WExpansion> powers{kernel};
    const auto& p = wp_.P.coeffs();
    for (size_t r = 1; r < p.size(); ++r) powers.push_back(powers.back().apply_D(lattice_.T));
    bool first = true;
    for (size_t r = 0; r < p.size(); ++r) {
      if (p[r] == 0) continue;
      WExpansion term = powers[r];
      term.num = term.num * (r % 2 == 0 ? p[r] : -p[r]);
      if (first) {
        form_ = term;
        first = false;
      } else {
        form_ += term;
      }
    }
  }

  // Poles sit on the imaginary axis at multiples of 2*pi*i/T.
  double pole_distance(cplx t) const {
    double period = 2.0 * std::numbers::pi / to_double(lattice_.T);
    double k = std::round(t.imag() / period);
    return std::abs(t - cplx(0.0, k * period));
  }

  ThetaValue eval(cplx t, double pole_tol = -1.0) const {
    double T = to_double(lattice_.T);
    if (pole_tol < 0) pole_tol = 1e-6 * T;
    ThetaValue out;
    out.pole_flag = pole_distance(t) < pole_tol;
    out.value = form_.eval(std::exp(-t * (T / 2.0)));
    return out;
  }

  const MType& sigma() const { return sigma_; }
  const LatticeSpec& lattice() const { return lattice_; }
  const WeylPolynomial& weyl() const { return wp_; }

 private:
  MType sigma_;
  LatticeSpec lattice_;
  WeylPolynomial wp_;
  WExpansion form_;
};

// Generated positive lattice points with multiplicities P(lambda).
struct DualSpectrum {
  LatticeSpec lattice;
  WeylPolynomial poly;

  explicit DualSpectrum(const MType& sigma)
      : lattice(lattice_of(sigma)), poly(weyl_polynomial(sigma)) {}

  struct Entry {
    Rat lambda;
    Rat mult;
  };

  std::vector<Entry> entries(double cutoff) const {
    std::vector<Entry> out;
    long k = (lattice.eps == 0) ? 1 : 0;
    for (;; ++k) {
      Rat lam = lattice.T * (Rat(k) + lattice.eps);
      if (to_double(lam) > cutoff) break;
      out.push_back({lam, poly.P.eval(lam)});
    }
    return out;
  }

  // Partial sum of the Dirichlet series with a rigorous geometric tail bound.
  cplx partial_theta(cplx t, double tol = 1e-12) const {
    double re_t = t.real();
    if (re_t <= 0) throw input_error("partial theta sum requires Re t > 0");
    double coef_bound = 0.0;
    for (const auto& c : poly.P.coeffs()) coef_bound += std::abs(to_double(c));
    int degree = static_cast<int>(poly.P.coeffs().size()) - 1;
    double T = to_double(lattice.T);
    double geo = 1.0 / (1.0 - std::exp(-T * re_t / 2.0));
    cplx sum{};
    long k = (lattice.eps == 0) ? 1 : 0;
    for (long steps = 0; steps < 200000; ++steps, ++k) {
      Rat lam = lattice.T * (Rat(k) + lattice.eps);
      double lam_d = to_double(lam);
      sum += to_double(poly.P.eval(lam)) * std::exp(-t * lam_d);
      double next = lam_d + T;
      double tail = coef_bound * std::pow(std::max(next, 1.0), degree) *
                    std::exp(-next * re_t) * geo;
      if (next * re_t > 2.0 * degree && tail < tol) return sum;
    }
    throw tolerance_error("theta partial sum did not reach the requested tail bound");
  }
};

// Even test function: a symmetrized Gaussian g(t-c) + g(t+c), g = exp(-t^2/(2 width^2)).
struct GaussianProbe {
  double center;
  double width;

  double value(double t) const {
    auto g = [&](double u) { return std::exp(-u * u / (2 * width * width)); };
    return g(t - center) + g(t + center);
  }

  // n-th derivative via the Hermite recursion He_{n+1}(x) = x He_n - n He_{n-1}.
  double derivative(int n, double t) const {
    auto dg = [&](double u) {
      double x = u / width;
      double h0 = 1.0, h1 = x;
      if (n == 0) return std::exp(-x * x / 2);
      for (int k = 1; k < n; ++k) {
        double h2 = x * h1 - k * h0;
        h0 = h1;
        h1 = h2;
      }
      double sign = (n % 2 == 0) ? 1.0 : -1.0;
      return sign * std::pow(width, -n) * h1 * std::exp(-x * x / 2);
    };
    return dg(t - center) + dg(t + center);
  }

  // Cosine transform over the whole line.
  double cosine_transform(double lam) const {
    return 2.0 * std::sqrt(2.0 * std::numbers::pi) * width *
           std::exp(-lam * lam * width * width / 2) * std::cos(lam * center);
  }
};

enum class PairingSide { noncompact, dual };

namespace detail {

struct LogPoint {
  double t;
  int sign;  // F ~ sign * ln|t - t0| near t0
};

// Integrate psi(t) * F(t) over [0, t_max] where F has logarithmic
// singularities at the given points: subtract the local log and add it back
// with the substitution-based rule.
template <typename Psi, typename Kernel>
double integrate_with_log_points(Psi&& psi, Kernel&& F, const std::vector<LogPoint>& pts,
                                 double t_max) {
  double total = 0.0;
  std::vector<double> cuts{0.0, t_max};
  for (const auto& p : pts)
    if (p.t > 0 && p.t < t_max) cuts.push_back(p.t);
  std::sort(cuts.begin(), cuts.end());
  auto near = [&](double t) -> const LogPoint* {
    for (const auto& p : pts)
      if (std::abs(p.t - t) < 1e-12) return &p;
    return nullptr;
  };
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    const LogPoint* la = near(a);
    const LogPoint* lb = near(b);
    double mid = 0.5 * (a + b);
    auto smooth_part = [&](double lo, double hi, const LogPoint* lp) {
      auto f = [&](double t) {
        double v = F(t);
        if (lp) v -= lp->sign * std::log(std::abs(t - lp->t));
        return psi(t) * v;
      };
      return quad::integrate(f, lo, hi, 16, 32);
    };
    total += smooth_part(a, mid, la);
    total += smooth_part(mid, b, lb);
    if (la)
      total += la->sign * quad::integrate_log_weighted([&](double u) { return psi(a + u); }, mid - a);
    if (lb)
      total += lb->sign * quad::integrate_log_weighted([&](double u) { return psi(b - u); }, b - mid);
  }
  return total;
}

}  // namespace detail

// Distributional pairing of the wave/heat kernel distribution with an even
// Gaussian probe, normalized by the volume of the compact dual.
inline double k_pairing(const GaussianProbe& phi, const MType& sigma, PairingSide side) {
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  double T = to_double(lat.T);
  bool half = (lat.eps != 0);
  int n = sigma.space.dim_real;
  double outer_sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;

  const auto& q = wp.Q.coeffs();
  // psi = (1/T) * Q(op) * phi''  with op = d/dt (noncompact) or i d/dt (dual)
  auto psi = [&](double t) {
    double acc = 0.0;
    for (size_t r = 0; r < q.size(); ++r) {
      if (q[r] == 0) continue;
      double c = to_double(q[r]);
      if (side == PairingSide::dual && (r / 2) % 2 == 1) c = -c;
      acc += c * phi.derivative(static_cast<int>(r) + 2, t);
    }
    return acc / T;
  };

  double t_max = phi.center + 15.0 * phi.width;
  std::vector<detail::LogPoint> pts;
  std::function<double(double)> F;
  if (side == PairingSide::noncompact) {
    pts.push_back({0.0, 1});
    if (half)
      F = [T](double t) { return std::log(std::abs(std::tanh(T * t / 4))); };
    else
      F = [T](double t) { return std::log(std::abs(std::sinh(T * t / 2))); };
  } else {
    if (half) {
      F = [T](double t) { return std::log(std::abs(std::tan(T * t / 4))); };
      for (int k = 0;; ++k) {
        double zero = 4 * std::numbers::pi * k / T;
        double pole = (2 + 4 * k) * std::numbers::pi / T;
        if (zero > t_max && pole > t_max) break;
        if (zero <= t_max) pts.push_back({zero, 1});
        if (pole <= t_max) pts.push_back({pole, -1});
      }
    } else {
      F = [T](double t) { return std::log(std::abs(std::sin(T * t / 2))); };
      for (int k = 0;; ++k) {
        double zero = 2 * std::numbers::pi * k / T;
        if (zero > t_max) break;
        pts.push_back({zero, 1});
      }
    }
  }
  double integral = 2.0 * detail::integrate_with_log_points(psi, F, pts, t_max);
  return side == PairingSide::noncompact ? -outer_sign * integral : integral;
}

struct DualDetResult {
  cplx value;
  Rat zero_order = 0;     // multiplicity of the excluded lattice hit, if any
  bool lattice_hit = false;
};

// Zeta-regularized determinant det(A_d -/+ lambda) over the positive lattice,
// via Hurwitz zeta values of the shifted argument.
inline DualDetResult dual_det(cplx lambda, int sign, const MType& sigma) {
  if (sign != 1 && sign != -1) throw input_error("dual_det sign must be +1 or -1");
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  double T = to_double(lat.T);
  long k0 = (lat.eps == 0) ? 1 : 0;
  double eps = to_double(lat.eps);
  cplx shift = cplx(static_cast<double>(sign)) * lambda;

  DualDetResult out;
  cplx acc_log{};
  long j = 0;
  // peel off leading factors until the Hurwitz argument has safe real part
  while (true) {
    cplx qq = cplx(static_cast<double>(k0 + j) + eps) - shift / T;
    if (qq.real() > 0.4) break;
    Rat mu = lat.T * (Rat(k0 + j) + lat.eps);
    cplx factor = cplx(to_double(mu)) - shift;
    Rat mult = wp.P.eval(mu);
    if (std::abs(factor) < 1e-12) {
      out.lattice_hit = true;
      out.zero_order += mult;
    } else {
      acc_log += to_double(mult) * std::log(factor);
    }
    ++j;
    if (j > 1000000) throw input_error("dual_det shift did not terminate");
  }
  cplx q = cplx(static_cast<double>(k0 + j) + eps) - shift / T;

  auto coeffs = compose_linear_complex(wp.P, cplx(T), shift);  // P(T u + sign*lambda)
  double lnT = std::log(T);
  for (size_t r = 0; r < coeffs.size(); ++r) {
    if (coeffs[r] == cplx{}) continue;
    auto z = hurwitz_zeta_with_deriv(cplx(-static_cast<double>(r)), q);
    acc_log += coeffs[r] * (lnT * z.value - z.deriv);
  }
  out.value = std::exp(acc_log);
  return out;
}

// Reflection formula for the ratio det(A_d - lambda)/det(A_d + lambda).
inline cplx dual_det_reflection_ratio(double lambda, const MType& sigma) {
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  double T = to_double(lat.T);
  bool half = (lat.eps != 0);
  auto integrand = [&](double s) {
    double trig = half ? std::tan(std::numbers::pi * s / T)
                       : -1.0 / std::tan(std::numbers::pi * s / T);
    return trig * s * wp.Q.eval(cplx(s)).real();
  };
  double integral = quad::integrate_adaptive(integrand, 0.0, lambda, 1e-13);
  return std::exp(cplx(-(std::numbers::pi / T) * integral));
}

struct HeatCoefficients {
  std::map<int, Rat> d_coeffs;  // theta_d(t) ~ sum d_k t^k
  std::map<int, Rat> c_coeffs;  // Tr exp(-t A_d^2) ~ sum c_k t^k
};

inline HeatCoefficients heat_coefficients(const MType& sigma, int order) {
  if (order < 0) throw input_error("heat coefficient order must be nonnegative");
  auto lat = lattice_of(sigma);
  auto wp = weyl_polynomial(sigma);
  const auto& p = wp.P.coeffs();
  int deg = static_cast<int>(p.size()) - 1;
  int terms = order + deg + 3;

  // kernel series: sum over the positive lattice of exp(-lambda t), i.e.
  // 1/(exp(T t)-1) for eps=0 or 1/(2 sinh(T t/2)) for eps=1/2
  std::vector<Rat> den_coeffs;
  Rat fact = 1;
  for (int nn = 1; nn <= terms + 3; ++nn) {
    fact *= nn;
    Rat c = 0;
    if (lat.eps == 0) {
      c = 1;
      for (int i = 0; i < nn; ++i) c *= lat.T;
      c /= fact;
    } else if (nn % 2 == 1) {
      c = 2;
      for (int i = 0; i < nn; ++i) c *= lat.T / 2;
      c /= fact;
    }
    den_coeffs.push_back(c);
  }
  Laurent den(1, den_coeffs);
  Laurent f = den.inverse(terms + 2);

  HeatCoefficients out;
  // theta = P(-d/dt) f
  Laurent theta;
  Laurent df = f;
  bool first = true;
  for (int r = 0; r <= deg; ++r) {
    if (r > 0) df = df.derivative();
    if (p[r] == 0) continue;
    Laurent term = df * (r % 2 == 0 ? p[r] : -p[r]);
    theta = first ? term : theta + term;
    first = false;
  }
  for (int k = -sigma.space.dim_real; k <= order; ++k) out.d_coeffs[k] = theta.coeff(k);

  // Gaussian-kernel coefficients
  Rat T = lat.T;
  for (int m = 1; 2 * m - 1 <= deg; ++m) {
    Rat fac = 1;
    for (int i = 2; i <= m - 1; ++i) fac *= i;
    out.c_coeffs[-m] = p[2 * m - 1] * fac / (2 * T);
  }
  Rat q0 = (lat.eps == 0) ? Rat(1) : lat.eps;
  Rat kfact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= k;
    Rat z2 = 0;  // Z2(-k) = sum_r p_r T^(r+2k) zeta_H(-2k-r, q0)
    for (int r = 0; r <= deg; ++r) {
      if (p[r] == 0) continue;
      Rat tp = 1;
      for (int i = 0; i < r + 2 * k; ++i) tp *= T;
      z2 += p[r] * tp * hurwitz_zeta_neg_int(2 * k + r, q0);
    }
    out.c_coeffs[k] = (k % 2 == 0 ? z2 : -z2) / kfact;
  }
  return out;
}

}  // namespace zetascope
