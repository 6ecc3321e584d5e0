#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rational.hpp"

namespace zetascope {

enum class Family { RealH, ComplexH, QuaternionicH, CayleyH };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::RealH: return "RealH";
    case Family::ComplexH: return "ComplexH";
    case Family::QuaternionicH: return "QuaternionicH";
    case Family::CayleyH: return "CayleyH";
  }
  return "?";
}

using Weight = std::vector<Rat>;

// One of the four even-dimensional rank-one families with its full root data.
//
// Coordinate charts (all weights are coordinate vectors; the bilinear form is
// (x,y) = form_scale * sum_i x_i y_i):
//   RealH  m : B_m coordinates e_1..e_m, form_scale 1, a* along e_1.
//              Positive roots e_i +- e_j (i<j), e_i.
//   ComplexH n: sl(n+1) traceless (n+1)-tuples e_0..e_n, form_scale 2
//              (trace form (X,Y)=tr XY/2 metric), a* along (e_0-e_1)/2.
//              Positive system chosen so restrictions to a* are >= 0:
//              e_0-e_j, e_j-e_1 (j>=2), e_0-e_1, and m-roots e_i-e_j (2<=i<j).
//   QuaternionicH n: C_{n+1} coordinates e_0..e_n, form_scale 2, a* along
//              (e_0+e_1)/2; standard positive system e_i+-e_j (i<j), 2e_i.
//   CayleyH  : F4 coordinates e_1..e_4, form_scale 4, a* along (1,1,1,1)/4.
//              Positive system from the functional v + tiny*(8,4,2,1),
//              v = (1,1,1,1)/2.
struct SpacePreset {
  Family family;
  int rank_param;           // m | n | n | 2
  int dim_real;             // 2m | 2n | 4n | 16
  Rat rho;                  // restricted half-sum as a number
  Rat T;                    // |long restricted root|
  int m_alpha, m_2alpha;    // restricted root multiplicities
  int chi_dual;             // Euler characteristic of the compact dual
  int cartan_rank;          // coordinates of h*
  Rat form_scale;
  std::vector<Weight> pos_roots;      // all of Phi^+(g^c, h)
  Weight a_unit;                      // unit-norm basis of a*
  Weight delta;                       // half sum of pos_roots
  Weight rho_m;                       // delta minus its a*-component

  Rat form(const Weight& x, const Weight& y) const {
    Rat s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s * form_scale;
  }

  // Restricted length of a root: coefficient of the unit a*-vector.
  Rat restriction(const Weight& beta) const { return form(beta, a_unit); }

  std::string code() const {
    switch (family) {
      case Family::RealH: return "RH" + std::to_string(dim_real);
      case Family::ComplexH: return "CH" + std::to_string(rank_param);
      case Family::QuaternionicH: return "QH" + std::to_string(rank_param);
      case Family::CayleyH: return "OH2";
    }
    return "?";
  }
};

namespace detail {

inline void add_real_roots(int m, std::vector<Weight>& roots) {
  auto e = [&](int i) { Weight w(m, Rat(0)); w[i] = 1; return w; };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Weight p = e(i), q = e(j), a = p, b = p;
      a[j] = Rat(-1);
      b[j] = Rat(1);
      roots.push_back(a);  // e_i - e_j
      roots.push_back(b);  // e_i + e_j
    }
  for (int i = 0; i < m; ++i) roots.push_back(e(i));
}

inline void add_complex_roots(int n, std::vector<Weight>& roots) {
  auto diff = [&](int i, int j) {
    Weight w(n + 1, Rat(0));
    w[i] = 1;
    w[j] = -1;
    return w;
  };
  for (int j = 2; j <= n; ++j) roots.push_back(diff(0, j));
  for (int j = 2; j <= n; ++j) roots.push_back(diff(j, 1));
  roots.push_back(diff(0, 1));
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back(diff(i, j));
}

inline void add_quaternionic_roots(int n, std::vector<Weight>& roots) {
  int r = n + 1;
  auto e = [&](int i) { Weight w(r, Rat(0)); w[i] = 1; return w; };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Weight a = e(i), b = e(i);
      a[j] = Rat(-1);
      b[j] = Rat(1);
      roots.push_back(a);
      roots.push_back(b);
    }
  for (int i = 0; i < r; ++i) {
    Weight w(r, Rat(0));
    w[i] = 2;
    roots.push_back(w);
  }
}

inline void add_f4_roots(std::vector<Weight>& roots) {
  // Long: e_i - e_j, e_i + e_j; short: e_i and half-sum spinor weights.
  auto mk = [](Rat a, Rat b, Rat c, Rat d) { return Weight{a, b, c, d}; };
  for (int i = 0; i < 4; ++i) {
    Weight w(4, Rat(0));
    w[i] = 1;
    roots.push_back(w);  // e_i
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Weight w(4, Rat(0));
      w[i] = 1;
      w[j] = 1;
      roots.push_back(w);  // e_i + e_j
    }
  roots.push_back(mk(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)));
  // one minus sign: restriction T/2
  roots.push_back(mk(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)));
  roots.push_back(mk(Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2)));
  roots.push_back(mk(Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2)));
  roots.push_back(mk(Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)));
  // restriction zero (m = so(7) part)
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Weight w(4, Rat(0));
      w[i] = 1;
      w[j] = -1;
      roots.push_back(w);  // e_i - e_j
    }
  roots.push_back(mk(Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)));
  roots.push_back(mk(Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)));
  roots.push_back(mk(Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)));
}

}  // namespace detail

inline SpacePreset make_space(Family family, int rank_param) {
  SpacePreset s;
  s.family = family;
  s.rank_param = rank_param;
  switch (family) {
    case Family::RealH: {
      if (rank_param < 1) throw input_error("RealH requires m >= 1");
      int m = rank_param;
      s.dim_real = 2 * m;
      s.rho = Rat(2 * m - 1, 2);
      s.T = 1;
      s.m_alpha = 2 * m - 1;
      s.m_2alpha = 0;
      s.chi_dual = 2;
      s.cartan_rank = m;
      s.form_scale = 1;
      detail::add_real_roots(m, s.pos_roots);
      s.a_unit = Weight(m, Rat(0));
      s.a_unit[0] = 1;
      break;
    }
    case Family::ComplexH: {
      if (rank_param < 2) throw input_error("ComplexH requires n >= 2");
      int n = rank_param;
      s.dim_real = 2 * n;
      s.rho = n;
      s.T = 2;
      s.m_alpha = 2 * n - 2;
      s.m_2alpha = 1;
      s.chi_dual = n + 1;
      s.cartan_rank = n + 1;
      s.form_scale = 2;
      detail::add_complex_roots(n, s.pos_roots);
      s.a_unit = Weight(n + 1, Rat(0));
      s.a_unit[0] = Rat(1, 2);
      s.a_unit[1] = Rat(-1, 2);
      break;
    }
    case Family::QuaternionicH: {
      if (rank_param < 2) throw input_error("QuaternionicH requires n >= 2");
      int n = rank_param;
      s.dim_real = 4 * n;
      s.rho = 2 * n + 1;
      s.T = 2;
      s.m_alpha = 4 * n - 4;
      s.m_2alpha = 3;
      s.chi_dual = n + 1;
      s.cartan_rank = n + 1;
      s.form_scale = 2;
      detail::add_quaternionic_roots(n, s.pos_roots);
      s.a_unit = Weight(n + 1, Rat(0));
      s.a_unit[0] = Rat(1, 2);
      s.a_unit[1] = Rat(1, 2);
      break;
    }
    case Family::CayleyH: {
      if (rank_param != 2) throw input_error("CayleyH has fixed rank parameter 2");
      s.dim_real = 16;
      s.rho = 11;
      s.T = 2;
      s.m_alpha = 8;
      s.m_2alpha = 7;
      s.chi_dual = 3;
      s.cartan_rank = 4;
      s.form_scale = 4;
      detail::add_f4_roots(s.pos_roots);
      s.a_unit = Weight(4, Rat(1, 4));
      break;
    }
  }
  // delta = half sum of positive roots; rho_m = delta - (delta, a_unit) a_unit.
  s.delta.assign(s.cartan_rank, Rat(0));
  for (const auto& r : s.pos_roots)
    for (int i = 0; i < s.cartan_rank; ++i) s.delta[i] += r[i] / 2;
  Rat proj = s.form(s.delta, s.a_unit);
  if (proj != s.rho) throw input_error("internal: restricted half-sum mismatch for " + s.code());
  s.rho_m.assign(s.cartan_rank, Rat(0));
  for (int i = 0; i < s.cartan_rank; ++i) s.rho_m[i] = s.delta[i] - proj * s.a_unit[i];
  return s;
}

// Parse codes "RH4", "CH2", "QH3", "OH2".
inline SpacePreset space_from_code(const std::string& code) {
  if (code.size() < 3) throw input_error("bad space code: " + code);
  std::string head = code.substr(0, 2);
  int value = 0;
  try {
    value = std::stoi(code.substr(2));
  } catch (const std::exception&) {
    throw input_error("bad space code: " + code);
  }
  if (head == "RH") {
    if (value % 2 != 0) throw input_error("RealH dimension must be even: " + code);
    return make_space(Family::RealH, value / 2);
  }
  if (head == "CH") return make_space(Family::ComplexH, value);
  if (head == "QH") return make_space(Family::QuaternionicH, value);
  if (head == "OH") {
    if (value != 2) throw input_error("Cayley space code is OH2");
    return make_space(Family::CayleyH, 2);
  }
  throw input_error("unknown space code: " + code);
}

// Lengths of the closed geodesics of the compact dual: 2*pi*k/T.
inline std::vector<double> closed_geodesic_lengths_dual(const SpacePreset& s, int count) {
  if (count < 1) throw input_error("count must be >= 1");
  std::vector<double> out;
  const double pi = 3.14159265358979323846;
  for (int k = 1; k <= count; ++k) out.push_back(2 * pi * k / to_double(s.T));
  return out;
}

}  // namespace zetascope
