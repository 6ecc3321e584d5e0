#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <zetascope/geodesics.hpp>
#include <zetascope/ruelle.hpp>

using namespace zetascope;

static std::string data_path(const std::string& name) {
  return std::string(ZETASCOPE_DATA_DIR) + "/" + name;
}

TEST_CASE("I_p tables for the real family") {
  for (int m = 1; m <= 4; ++m) {
    auto s = make_space(Family::RealH, m);
    auto table = ip_decomposition(s);  // construction runs the validator
    REQUIRE(static_cast<int>(table.rows.size()) == 2 * m);
    for (int p = 0; p < 2 * m; ++p) {
      REQUIRE(table.rows[p].size() == 1);
      REQUIRE(table.rows[p][0].sigma.label == "sigma^" + std::to_string(std::min(p, 2 * m - 1 - p)));
      REQUIRE(table.rows[p][0].chi == Rat(p));
    }
  }
}

TEST_CASE("I_p tables for the complex family") {
  for (int n = 2; n <= 4; ++n) REQUIRE_NOTHROW(ip_decomposition(make_space(Family::ComplexH, n)));

  auto s = make_space(Family::ComplexH, 2);
  auto table = ip_decomposition(s);
  REQUIRE(table.rows.size() == 4);
  // degree zero is the trivial type with weight zero
  REQUIRE(table.rows[0].size() == 1);
  for (const auto& c : table.rows[0][0].sigma.mu) REQUIRE(c == 0);
  REQUIRE(table.rows[0][0].chi == 0);
  // degree one: Lambda^{1,0} and Lambda^{0,1} at weight 1, the 2-alpha line at weight 2
  REQUIRE(table.rows[1].size() == 3);
  REQUIRE(table.rows[1][0].sigma.label == "Lambda^{1,0}");
  REQUIRE(table.rows[1][0].chi == 1);
  REQUIRE(table.rows[1][1].sigma.label == "Lambda^{0,1}");
  REQUIRE(table.rows[1][1].chi == 1);
  REQUIRE(table.rows[1][2].sigma.label == "Lambda^{0,0}");
  REQUIRE(table.rows[1][2].chi == 2);
  // top degree pairs with degree zero under duality, chi -> 2 rho
  REQUIRE(table.rows[3].size() == 1);
  REQUIRE(table.rows[3][0].chi == 2 * s.rho);
}

TEST_CASE("I_p tables for the quaternionic family stop at p = 1") {
  auto s = make_space(Family::QuaternionicH, 2);
  auto table = ip_decomposition(s);
  REQUIRE(table.rows.size() == 2);
  REQUIRE(table.rows[0].size() == 1);
  REQUIRE(table.rows[0][0].chi == 0);
  REQUIRE(table.rows[1].size() == 2);
  REQUIRE(table.rows[1][0].sigma.label == "sigma1");
  REQUIRE(table.rows[1][0].chi == 1);
  REQUIRE(table.rows[1][1].sigma.label == "sigmaprime");
  REQUIRE(table.rows[1][1].chi == 2);
  REQUIRE(dim_sigma(table.rows[1][0].sigma) == 4);
  REQUIRE(dim_sigma(table.rows[1][1].sigma) == 3);
  REQUIRE_THROWS_AS(ruelle_h_polynomial(table), capability_error);
}

TEST_CASE("Cayley I_p decomposition is unavailable") {
  REQUIRE_THROWS_AS(ip_decomposition(make_space(Family::CayleyH, 2)), capability_error);
}

TEST_CASE("alternating-degree polynomial is the constant (dim/2) chi_dual") {
  for (int m = 1; m <= 3; ++m) {
    auto s = make_space(Family::RealH, m);
    Poly h = ruelle_h_polynomial(ip_decomposition(s));
    REQUIRE(h.degree() == 0);
    REQUIRE(h.coeff(0) == Rat(s.dim_real / 2) * s.chi_dual);
  }
  for (int n = 2; n <= 3; ++n) {
    auto s = make_space(Family::ComplexH, n);
    Poly h = ruelle_h_polynomial(ip_decomposition(s));
    REQUIRE(h.degree() == 0);
    REQUIRE(h.coeff(0) == Rat(s.dim_real / 2) * s.chi_dual);
    // constancy at rational sample points, e.g. m=1 -> 2 and n=2 -> 6
    for (int k = 1; k <= 20; ++k) REQUIRE(h.eval(Rat(k, 7)) == Rat(s.dim_real / 2) * s.chi_dual);
  }
}

TEST_CASE("direct product over primitive classes") {
  auto space = make_space(Family::RealH, 1);
  LengthSpectrum empty;
  empty.space = space;
  empty.cutoff_L = 10.0;
  REQUIRE(ruelle_direct(cplx(3.0), empty).value == cplx(1.0));

  auto spec = cyclic_spectrum(space, 1.0, 40, 4 * std::numbers::pi, -2);
  auto v = ruelle_direct(cplx(3.0), spec);
  REQUIRE(v.value.real() == Catch::Approx(1.0 / (1.0 - std::exp(-3.0))).epsilon(1e-12));
  REQUIRE(v.value.real() == Catch::Approx(1.05240).epsilon(1e-5));
  REQUIRE(v.tail_bound < 1e-6);
  REQUIRE_THROWS_AS(ruelle_direct(cplx(0.8), spec), input_error);
  REQUIRE_NOTHROW(ruelle_direct(cplx(0.8), spec, true));
}

TEST_CASE("factorized product matches the direct product on the cyclic fixture") {
  auto space = make_space(Family::RealH, 1);
  auto spec = cyclic_spectrum(space, 1.0, 40, 4 * std::numbers::pi, -2);
  for (double im : {0.0, 0.5}) {
    cplx s(2.0, im);
    auto direct = ruelle_direct(s, spec);
    auto fact = ruelle_eval(s, spec);
    REQUIRE(std::abs(direct.value - fact.value) < 1e-9);
  }
}

TEST_CASE("factorized product matches the direct product on the octagon spectrum") {
  auto gens = load_generators(data_path("bolza_octagon.json"));
  auto spec = enumerate_fuchsian(gens, 6.0, 8);
  RuelleCache cache;
  for (double im : {0.0, -0.7, -0.3, 0.3, 0.7}) {
    cplx s(2.0, im);  // Re s = 2 rho + 1
    auto direct = ruelle_direct(s, spec);
    auto fact = ruelle_eval(s, spec, &cache);
    REQUIRE(std::abs(direct.value - fact.value) < 1e-9);
  }
}

TEST_CASE("functional-equation integrals match the closed form") {
  auto rh = make_space(Family::RealH, 1);
  auto fc = ruelle_functional_check(cplx(0.37), rh);
  REQUIRE(std::abs(fc.lhs.real() - fc.rhs) < 1e-7);

  auto ch = make_space(Family::ComplexH, 2);
  auto fc2 = ruelle_functional_check(cplx(0.61, 0.2), ch);
  REQUIRE(std::abs(fc2.lhs.real() - fc2.rhs) < 1e-7);
}

TEST_CASE("order of the singularity at zero") {
  REQUIRE(ruelle_order_at_zero(make_space(Family::RealH, 1), -2) == -2);
  REQUIRE(ruelle_order_at_zero(make_space(Family::RealH, 1), 0) == 0);
  for (long k : {-2L, 1L, 5L})
    REQUIRE(ruelle_order_at_zero(make_space(Family::ComplexH, 2), 3 * k) == 6 * k);
}
