#include <catch2/catch_amalgamated.hpp>

#include <zetascope/branching.hpp>

using namespace zetascope;
using G = VirtualRep::Group;

TEST_CASE("virtual representation arithmetic") {
  auto a = VirtualRep::single(G::K, "l1");
  auto b = VirtualRep::single(G::K, "l2");
  auto c = a + b - a;
  REQUIRE(c == b);
  REQUIRE((a - a).is_zero());
  REQUIRE((a * 3).terms.at("l1") == 3);
  REQUIRE((a * 0).is_zero());
  REQUIRE_THROWS_AS(a + VirtualRep::single(G::M, "1"), input_error);
  REQUIRE((a - b).to_string() == "l1 - l2");
}

TEST_CASE("tensor products use sorted formal labels and drop the unit") {
  auto a = VirtualRep::single(G::K, "s+");
  auto b = VirtualRep::single(G::K, "l1");
  auto one = VirtualRep::single(G::K, "1");
  REQUIRE(tensor(a, b) == tensor(b, a));
  REQUIRE(tensor(a, b).terms.count("l1*s+") == 1);
  REQUIRE(tensor(a, one) == a);
  auto sum = tensor(a + b, b);
  REQUIRE(sum.terms.count("l1*s+") == 1);
  REQUIRE(sum.terms.count("l1*l1") == 1);
}

TEST_CASE("branching of exterior powers on real hyperbolic spaces") {
  auto s = make_space(Family::RealH, 3);  // dim 6
  auto r1 = restrict_rep(VirtualRep::single(G::K, "l1"), s);
  REQUIRE(r1 == VirtualRep::single(G::M, "sigma1") + VirtualRep::single(G::M, "1"));
  auto r2 = restrict_rep(VirtualRep::single(G::K, "l2"), s);
  REQUIRE(r2 == VirtualRep::single(G::M, "sigma2") + VirtualRep::single(G::M, "sigma1"));
  auto rs = restrict_rep(VirtualRep::single(G::K, "s+") - VirtualRep::single(G::K, "s-"), s);
  REQUIRE(rs.is_zero());
}

TEST_CASE("half-spin kernel survives twisting by any generator") {
  auto s = make_space(Family::RealH, 4);
  auto diff = VirtualRep::single(G::K, "s+") - VirtualRep::single(G::K, "s-");
  for (std::string tau : {"l1", "l2", "l3", "s+", "s-"}) {
    auto twisted = tensor(diff, VirtualRep::single(G::K, tau));
    REQUIRE(restrict_rep(twisted, s).is_zero());
  }
}

TEST_CASE("branching tables for the complex, quaternionic, and octonionic families") {
  auto sc = make_space(Family::ComplexH, 3);
  auto r = restrict_rep(VirtualRep::single(G::K, "L{1,1}"), sc);
  REQUIRE(r.terms.at("M{1,1}") == 1);
  REQUIRE(r.terms.at("M{1,0}") == 1);
  REQUIRE(r.terms.at("M{0,1}") == 1);
  REQUIRE(r.terms.at("1") == 1);
  auto r10 = restrict_rep(VirtualRep::single(G::K, "L{1,0}"), sc);
  REQUIRE(r10 == VirtualRep::single(G::M, "M{1,0}") + VirtualRep::single(G::M, "1"));

  auto sq = make_space(Family::QuaternionicH, 2);
  auto rq = restrict_rep(VirtualRep::single(G::K, "l1"), sq);
  REQUIRE(rq.terms.at("sigma1") == 1);
  REQUIRE(rq.terms.at("sigmaprime") == 1);
  REQUIRE(rq.terms.at("1") == 1);
  REQUIRE(restrict_rep(VirtualRep::single(G::K, "lprime"), sq) ==
          VirtualRep::single(G::M, "sigmaprime"));

  auto so = make_space(Family::CayleyH, 2);
  auto ro = restrict_rep(VirtualRep::single(G::K, "s9"), so);
  REQUIRE(ro.terms.at("s7") == 1);
  REQUIRE(ro.terms.at("sigma1") == 1);
  REQUIRE(ro.terms.at("1") == 1);
}

TEST_CASE("admissible lifts invert restriction on the whole catalog") {
  auto check = [](const SpacePreset& s, const std::string& sigma) {
    auto lift = admissible_lift(sigma, s);
    auto back = restrict_rep(lift, s);
    std::string canon = (sigma == "trivial") ? "1" : sigma;
    INFO(s.code() << " sigma=" << sigma << " lift=" << lift.to_string()
                  << " restricts to " << back.to_string());
    REQUIRE(back == VirtualRep::single(G::M, canon));
  };
  for (int m : {2, 3, 4, 5}) {
    auto s = make_space(Family::RealH, m);
    check(s, "trivial");
    check(s, "s0");
    for (int p = 1; p <= m - 1; ++p) check(s, "sigma" + std::to_string(p));
  }
  for (int n : {2, 3, 4}) {
    auto s = make_space(Family::ComplexH, n);
    check(s, "trivial");
    for (int p = 0; p <= n - 1; ++p)
      for (int q = 0; p + q <= n - 1; ++q)
        if (p + q > 0) check(s, "M{" + std::to_string(p) + "," + std::to_string(q) + "}");
  }
  for (int n : {2, 3}) {
    auto s = make_space(Family::QuaternionicH, n);
    check(s, "trivial");
    check(s, "sigma1");
    check(s, "sigmaprime");
  }
  auto so = make_space(Family::CayleyH, 2);
  check(so, "trivial");
  check(so, "sigma1");
  check(so, "sigma2");
  check(so, "s7");
}

TEST_CASE("lift of the middle exterior weight has alternating signs") {
  auto s = make_space(Family::RealH, 4);
  auto lift = admissible_lift("sigma2", s);
  REQUIRE(lift.terms.at("l2") == 1);
  REQUIRE(lift.terms.at("l1") == -1);
  REQUIRE(lift.terms.at("1") == 1);
}

TEST_CASE("restriction is linear over integer combinations") {
  auto s = make_space(Family::RealH, 3);
  auto a = VirtualRep::single(G::K, "l1", 2);
  auto b = VirtualRep::single(G::K, "l2", -3);
  auto lhs = restrict_rep(a + b, s);
  auto rhs = restrict_rep(a, s) + restrict_rep(b, s);
  REQUIRE(lhs == rhs);
}

TEST_CASE("parser for virtual expressions") {
  auto v = parse_virtual_k("l2 - l1 + l0");
  REQUIRE(v.terms.at("l2") == 1);
  REQUIRE(v.terms.at("l1") == -1);
  REQUIRE(v.terms.at("1") == 1);
  auto w = parse_virtual_k("2*l1-1");
  REQUIRE(w.terms.at("l1") == 2);
  REQUIRE(w.terms.at("1") == -1);
  REQUIRE(parse_virtual_k("s9-l1").terms.at("s9") == 1);
}

TEST_CASE("unknown labels are rejected") {
  auto s = make_space(Family::RealH, 3);
  REQUIRE_THROWS_AS(restrict_rep(VirtualRep::single(G::K, "l7"), s), input_error);
  REQUIRE_THROWS_AS(admissible_lift("sigma9", s), input_error);
}
