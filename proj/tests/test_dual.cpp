#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <zetascope/dual.hpp>

using namespace zetascope;

static double zeta_prime_minus1() { return -0.16542114370045092921; }

TEST_CASE("theta closed form matches rigorous partial sums") {
  struct Case {
    MType sigma;
  };
  std::vector<MType> sigmas = {
      trivial_sigma(make_space(Family::RealH, 1)),
      real_forms_sigma(make_space(Family::RealH, 2), 1),
      trivial_sigma(make_space(Family::ComplexH, 2)),
  };
  for (const auto& sigma : sigmas) {
    ThetaDual theta(sigma);
    DualSpectrum spec(sigma);
    for (double t : {0.5, 1.0, 2.0, 3.0}) {
      auto v = theta.eval(cplx(t));
      REQUIRE_FALSE(v.pole_flag);
      auto s = spec.partial_theta(cplx(t), 1e-13);
      INFO(sigma.space.code() << " " << sigma.label << " t=" << t);
      REQUIRE(std::abs(v.value - s) < 1e-10);
    }
  }
}

TEST_CASE("theta golden values on the smallest spaces") {
  ThetaDual th1(trivial_sigma(make_space(Family::RealH, 1)));
  double expected = 0.5 * std::cosh(0.5) / (std::sinh(0.5) * std::sinh(0.5));
  REQUIRE(th1.eval(cplx(1.0)).value.real() == Catch::Approx(expected).epsilon(1e-12));
  REQUIRE(th1.eval(cplx(1.0)).value.real() == Catch::Approx(2.07636).epsilon(1e-5));

  ThetaDual th2(trivial_sigma(make_space(Family::ComplexH, 2)));
  double sum = 0.0;  // sum of m^3 exp(-2m): lattice 2Z with P(2m) = m^3
  for (int m = 1; m < 60; ++m) sum += std::pow(m, 3) * std::exp(-2.0 * m);
  REQUIRE(th2.eval(cplx(1.0)).value.real() == Catch::Approx(sum).epsilon(1e-10));
  REQUIRE(th2.eval(cplx(1.0)).value.real() == Catch::Approx(0.37761).epsilon(1e-4));
}

TEST_CASE("theta respects conjugation and decays to the first lattice term") {
  ThetaDual theta(real_forms_sigma(make_space(Family::RealH, 2), 1));
  cplx t{1.3, 0.7};
  auto a = theta.eval(t).value;
  auto b = theta.eval(std::conj(t)).value;
  REQUIRE(std::abs(b - std::conj(a)) < 1e-12);

  // dominant Dirichlet term at large t
  DualSpectrum spec(theta.sigma());
  auto first = spec.entries(5.0).front();
  double t_big = 25.0;
  double lead = to_double(first.mult) * std::exp(-to_double(first.lambda) * t_big);
  REQUIRE(theta.eval(cplx(t_big)).value.real() == Catch::Approx(lead).epsilon(1e-6));
}

TEST_CASE("poles are flagged near the imaginary lattice, not thrown") {
  ThetaDual theta(trivial_sigma(make_space(Family::RealH, 1)));
  double period = 2.0 * std::numbers::pi;  // T = 1
  auto near_pole = theta.eval(cplx(1e-8, period));
  REQUIRE(near_pole.pole_flag);
  auto away = theta.eval(cplx(0.5, period / 3));
  REQUIRE_FALSE(away.pole_flag);
}

static double lattice_pairing_oracle(const GaussianProbe& phi, const MType& sigma) {
  DualSpectrum spec(sigma);
  double sum = 0.0;
  for (const auto& e : spec.entries(400.0))
    sum += to_double(e.mult) * phi.cosine_transform(to_double(e.lambda));
  return sum;
}

TEST_CASE("dual pairing reproduces the lattice sum (Poisson check)") {
  std::vector<MType> sigmas = {
      trivial_sigma(make_space(Family::RealH, 1)),
      trivial_sigma(make_space(Family::ComplexH, 2)),
  };
  for (const auto& sigma : sigmas) {
    for (double c : {0.9, 1.5, 2.3}) {
      GaussianProbe phi{c, 0.2};
      double lhs = k_pairing(phi, sigma, PairingSide::dual);
      double rhs = lattice_pairing_oracle(phi, sigma);
      INFO(sigma.space.code() << " center=" << c << " lhs=" << lhs << " rhs=" << rhs);
      REQUIRE(std::abs(lhs - rhs) < 1e-6);
    }
  }
}

TEST_CASE("noncompact pairing is the signed integral of theta against the probe") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  ThetaDual theta(sigma);
  GaussianProbe phi{2.0, 0.25};
  double lhs = k_pairing(phi, sigma, PairingSide::noncompact);
  double rhs = 2.0 * quad::integrate_adaptive(
                         [&](double t) { return theta.eval(cplx(t)).value.real() * phi.value(t); },
                         0.05, 6.0, 1e-12);
  // probe mass below t=0.05 is negligible for this center/width
  int n = sigma.space.dim_real;
  double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  INFO("lhs=" << lhs << " rhs=" << rhs);
  REQUIRE(std::abs(lhs - sign * rhs) < 1e-8);
}

TEST_CASE("regularized determinant at the origin matches the zeta identity") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  auto dp = dual_det(cplx(0.0), +1, sigma);
  auto dm = dual_det(cplx(0.0), -1, sigma);
  double expected = std::exp(std::log(2.0) / 12.0 + zeta_prime_minus1());
  REQUIRE_FALSE(dp.lattice_hit);
  REQUIRE(std::abs(dp.value - dm.value) < 1e-12);
  REQUIRE(dp.value.real() == Catch::Approx(expected).epsilon(1e-10));
  REQUIRE(dp.value.real() == Catch::Approx(0.8979).epsilon(1e-4));
}

TEST_CASE("reflection formula for the determinant ratio") {
  for (const auto& sigma : {trivial_sigma(make_space(Family::RealH, 1)),
                            trivial_sigma(make_space(Family::ComplexH, 2))}) {
    double T = to_double(lattice_of(sigma).T);
    for (int i = 1; i <= 10; ++i) {
      double lam = T / 2 * i / 11.0;
      auto dp = dual_det(cplx(lam), +1, sigma);
      auto dm = dual_det(cplx(lam), -1, sigma);
      cplx ratio = dp.value / dm.value;
      cplx rhs = dual_det_reflection_ratio(lam, sigma);
      INFO(sigma.space.code() << " lambda=" << lam << " ratio=" << ratio << " rhs=" << rhs);
      REQUIRE(std::abs(ratio - rhs) < 1e-8);
    }
  }
}

TEST_CASE("a lattice hit is excluded and reported as a zero order") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  auto hit = dual_det(cplx(0.5), +1, sigma);  // lattice point 1/2, P(1/2) = 1
  REQUIRE(hit.lattice_hit);
  REQUIRE(hit.zero_order == 1);
  REQUIRE(std::isfinite(hit.value.real()));
}

TEST_CASE("heat coefficients of the two-sphere") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  auto hc = heat_coefficients(sigma, 2);
  REQUIRE(hc.d_coeffs.at(-2) == 2);
  REQUIRE(hc.d_coeffs.at(-1) == 0);
  REQUIRE(hc.d_coeffs.at(0) == Rat(1, 12));
  REQUIRE(hc.c_coeffs.at(-1) == 1);
}

TEST_CASE("negative heat coefficients obey the factorial identity on all families") {
  std::vector<MType> sigmas = {
      trivial_sigma(make_space(Family::RealH, 1)),
      real_spinor_sigma(make_space(Family::RealH, 1)),
      trivial_sigma(make_space(Family::ComplexH, 2)),
      complex_pq_sigma(make_space(Family::ComplexH, 2), 1, 0),
      trivial_sigma(make_space(Family::QuaternionicH, 2)),
      quaternionic_sigma1(make_space(Family::QuaternionicH, 2)),
      trivial_sigma(make_space(Family::CayleyH, 2)),
      cayley_sigma(make_space(Family::CayleyH, 2), "s7"),
  };
  for (const auto& sigma : sigmas) {
    auto hc = heat_coefficients(sigma, 1);
    INFO(sigma.space.code() << " " << sigma.label);
    for (int k = -sigma.space.dim_real; k < 0; ++k)
      if (k % 2 != 0) REQUIRE(hc.d_coeffs.at(k) == 0);
    for (int m = 1; m <= sigma.space.dim_real / 2; ++m) {
      Rat mfact = 1, m2fact = 1;
      for (int i = 2; i <= m; ++i) mfact *= i;
      for (int i = 2; i <= 2 * m; ++i) m2fact *= i;
      REQUIRE(hc.c_coeffs.at(-m) / mfact == hc.d_coeffs.at(-2 * m) / m2fact);
    }
  }
}

TEST_CASE("partial theta sums stay within the advertised tail bound") {
  auto sigma = quaternionic_sigma1(make_space(Family::QuaternionicH, 2));
  ThetaDual theta(sigma);
  DualSpectrum spec(sigma);
  for (double t = 0.3; t <= 5.0; t += 0.47) {
    auto closed = theta.eval(cplx(t)).value;
    auto sum = spec.partial_theta(cplx(t), 1e-11);
    REQUIRE(std::abs(closed - sum) < 1e-10);
  }
}
