#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <zetascope/geodesics.hpp>

using namespace zetascope;

static std::string data_path(const std::string& name) {
  return std::string(ZETASCOPE_DATA_DIR) + "/" + name;
}

TEST_CASE("trace-formula weight of a simple closed geodesic on a surface") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  GeodesicClass g;
  g.length = 1.0;
  g.holonomy_alpha = {0.0};
  double expected = 1.0 / (4.0 * std::sinh(0.5));
  REQUIRE(contribution(g, sigma) == Catch::Approx(expected).epsilon(1e-12));
  REQUIRE(contribution(g, sigma) == Catch::Approx(0.47977).epsilon(1e-4));
  REQUIRE(contribution(g, sigma) == Catch::Approx(-std::exp(0.5) / (2 * (1 - std::exp(1.0)))));
}

TEST_CASE("weight with nontrivial holonomy on a four-manifold") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 2));
  GeodesicClass g;
  g.length = 1.0;
  g.holonomy_alpha = {std::numbers::pi, -std::numbers::pi, 0.0};
  double e = std::exp(1.0);
  double expected = -std::pow(e, 1.5) / (2 * (1 - e) * (1 + e) * (1 + e));
  REQUIRE(contribution(g, sigma) == Catch::Approx(expected).epsilon(1e-12));
  REQUIRE(contribution(g, sigma) == Catch::Approx(0.09432).epsilon(1e-3));
}

TEST_CASE("zero sigma-trace kills the weight; bad input throws") {
  auto s = make_space(Family::RealH, 1);
  GeodesicClass g;
  g.length = 1.0;
  g.holonomy_alpha = {0.0};
  g.tr_sigma = 0.0;
  REQUIRE(contribution(g, trivial_sigma(s)) == 0.0);
  GeodesicClass bad = g;
  bad.tr_sigma.reset();
  bad.length = -1;
  REQUIRE_THROWS_AS(contribution(bad, trivial_sigma(s)), input_error);
  GeodesicClass wrong = g;
  wrong.holonomy_alpha = {0.0, 0.0};
  REQUIRE_THROWS_AS(contribution(wrong, trivial_sigma(s)), input_error);
}

TEST_CASE("sigma trace from holonomy is the elementary symmetric function") {
  auto s = make_space(Family::RealH, 2);
  GeodesicClass g;
  g.length = 1.0;
  double th = 0.7;
  g.holonomy_alpha = {th, -th, 0.0};
  double tr1 = geodesic_tr_sigma(g, real_forms_sigma(s, 1));
  REQUIRE(tr1 == Catch::Approx(2 * std::cos(th) + 1.0).epsilon(1e-12));
}

TEST_CASE("power law of the weight on a cyclic fixture") {
  auto sigma = trivial_sigma(make_space(Family::RealH, 1));
  double l0 = 1.3;
  auto spec = cyclic_spectrum(sigma.space, l0, 4, 4 * std::numbers::pi, -2);
  REQUIRE(spec.classes.size() == 4);
  for (int k = 1; k <= 4; ++k) {
    const auto& g = spec.classes[k - 1];
    REQUIRE(g.n_gamma == k);
    REQUIRE(g.primitive == (k == 1));
    double l = l0 * k;
    double closed = -l * std::exp(0.5 * l) / (2 * (1 - std::exp(l)));
    REQUIRE(contribution(g, sigma) == Catch::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("single-generator enumeration gives the cyclic class structure") {
  double l0 = 2.0;
  double e = std::exp(l0 / 2), tr = e + 1.0 / e;
  std::vector<Mat2> gens{{e, 0, 0, 1.0 / e}};
  auto spec = enumerate_fuchsian(gens, 3.1 * l0, 4);
  REQUIRE(spec.classes.size() == 6);  // powers 1..3 of the generator and of its inverse
  for (int k = 1; k <= 3; ++k) {
    int found = 0;
    for (const auto& g : spec.classes)
      if (std::abs(g.length - k * l0) < 1e-9) {
        ++found;
        REQUIRE(g.n_gamma == k);
        REQUIRE(g.primitive == (k == 1));
      }
    REQUIRE(found == 2);
  }
  REQUIRE(std::abs(tr - 2 * std::cosh(l0 / 2)) < 1e-12);
  REQUIRE_THROWS_AS(enumerate_fuchsian({}, 4.0, 4), input_error);
}

TEST_CASE("octagon surface group: systole and spectrum sanity") {
  auto gens = load_generators(data_path("bolza_octagon.json"));
  REQUIRE(gens.size() == 4);
  for (const auto& m : gens) REQUIRE(std::abs(m.a * m.d - m.b * m.c - 1.0) < 1e-12);

  auto start = std::chrono::steady_clock::now();
  auto spec = enumerate_fuchsian(gens, 4.0, 8);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  INFO("enumeration took " << ms << " ms, " << spec.classes.size() << " classes");
  REQUIRE_FALSE(spec.classes.empty());
  double systole = spec.classes.front().length;
  double expected = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
  REQUIRE(systole == Catch::Approx(expected).margin(1e-10));
  REQUIRE(systole == Catch::Approx(3.05714).margin(1e-4));
  REQUIRE(spec.chi_M == -2);
  REQUIRE(spec.vol_M == Catch::Approx(4 * std::numbers::pi));
  for (const auto& g : spec.classes) {
    REQUIRE(g.length >= systole - 1e-12);
    REQUIRE(g.length <= 4.0);
    REQUIRE(g.n_gamma >= 1);
  }
}

TEST_CASE("enumeration is stable when the word bound grows") {
  auto gens = load_generators(data_path("bolza_octagon.json"));
  auto a = enumerate_fuchsian(gens, 3.5, 7);
  auto b = enumerate_fuchsian(gens, 3.5, 8);
  // classes short enough to be captured at the smaller bound must persist
  for (size_t i = 0; i < a.classes.size(); ++i) {
    REQUIRE(i < b.classes.size());
    REQUIRE(b.classes[i].length == Catch::Approx(a.classes[i].length).margin(1e-9));
  }
}

TEST_CASE("counting bound: growth of the spectrum is at most exponential") {
  auto gens = load_generators(data_path("bolza_octagon.json"));
  auto spec = enumerate_fuchsian(gens, 4.0, 8);
  double rho = 0.5;  // surface case
  double C = 100.0;
  for (double N = 3.2; N <= 4.0; N += 0.2) {
    long count = 0;
    for (const auto& g : spec.classes)
      if (g.length < N) ++count;
    REQUIRE(count <= C * std::exp(2 * rho * N));
  }
}
