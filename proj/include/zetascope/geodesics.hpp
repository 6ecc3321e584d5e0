#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mtype.hpp"

#include <json.hpp>

namespace zetascope {

struct GeodesicClass {
  double length = 0;
  long n_gamma = 1;  // index of the class as a power of its primitive
  std::vector<double> holonomy_alpha;      // rotation angles on the alpha root space
  std::vector<double> holonomy_two_alpha;  // rotation angles on the 2*alpha root space
  std::optional<double> tr_sigma;          // supplied trace; otherwise computed from holonomy
  bool primitive = true;
};

struct LengthSpectrum {
  SpacePreset space;
  std::vector<GeodesicClass> classes;
  double cutoff_L = 0;
  double vol_M = 0;
  long chi_M = 0;
  long skipped_nonhyperbolic = 0;
};

namespace detail {

inline int thread_count() {
  if (const char* env = std::getenv("ZETASCOPE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// elementary symmetric polynomial e_p of the unit eigenvalues exp(i*theta)
inline double elementary_symmetric_of_angles(const std::vector<double>& angles, int p) {
  std::vector<cplx> e(p + 1, cplx(0.0));
  e[0] = 1.0;
  for (size_t i = 0; i < angles.size(); ++i) {
    cplx x{std::cos(angles[i]), std::sin(angles[i])};
    for (int j = std::min<int>(p, static_cast<int>(i) + 1); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[p].real();
}

}  // namespace detail

// Trace of sigma on the holonomy element, for catalog sigma where the trace
// is a symmetric function of the rotation angles.
inline double geodesic_tr_sigma(const GeodesicClass& g, const MType& sigma) {
  if (g.tr_sigma) return *g.tr_sigma;
  if (sigma.label == "trivial") return 1.0;
  if (sigma.space.family == Family::RealH && sigma.label.rfind("sigma^", 0) == 0) {
    int p = std::stoi(sigma.label.substr(6));
    if (static_cast<int>(g.holonomy_alpha.size()) != sigma.space.m_alpha)
      throw input_error("holonomy angle count does not match the alpha root multiplicity");
    return detail::elementary_symmetric_of_angles(g.holonomy_alpha, p);
  }
  throw capability_error("tr_sigma must be supplied for sigma = " + sigma.label);
}

// Trace-formula weight C(g, sigma) of a hyperbolic conjugacy class.
inline double contribution(const GeodesicClass& g, const MType& sigma) {
  const auto& s = sigma.space;
  if (g.length <= 0) throw input_error("geodesic length must be positive");
  if (static_cast<int>(g.holonomy_alpha.size()) != s.m_alpha ||
      static_cast<int>(g.holonomy_two_alpha.size()) != s.m_2alpha)
    throw input_error("holonomy angle lists must match the root multiplicities");
  double l = g.length;
  cplx det{1.0};
  for (double th : g.holonomy_alpha)
    det *= cplx(1.0) - std::exp(l) * cplx(std::cos(th), std::sin(th));
  for (double th : g.holonomy_two_alpha)
    det *= cplx(1.0) - std::exp(2 * l) * cplx(std::cos(th), std::sin(th));
  if (std::abs(det) < 1e-12) throw input_error("vanishing determinant: class is not hyperbolic");
  double tr = geodesic_tr_sigma(g, sigma);
  double value = -l * std::exp(to_double(s.rho) * l) * tr / (2.0 * det.real());
  if (std::abs(det.imag()) > 1e-9 * std::abs(det))
    throw input_error("holonomy angles are not closed under conjugation");
  return value;
}

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double trace() const { return a + d; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // unimodular
};

inline std::vector<Mat2> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open generator file: " + path);
  nlohmann::json doc;
  in >> doc;
  std::vector<Mat2> gens;
  for (const auto& m : doc.at("generators")) {
    auto num = [](const nlohmann::json& v) {
      return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
    };
    gens.push_back({num(m[0][0]), num(m[0][1]), num(m[1][0]), num(m[1][1])});
  }
  return gens;
}

namespace detail {

using Word = std::vector<int>;  // letters 0..n-1 generators, n..2n-1 inverses

inline int inverse_letter(int letter, int n) { return letter < n ? letter + n : letter - n; }

inline Word cyclic_reduce(Word w, int n) {
  while (w.size() >= 2 && w.front() == inverse_letter(w.back(), n)) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline Word canonical_rotation(const Word& w) {
  Word best = w;
  for (size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

inline long cyclic_period_index(const Word& w) {
  size_t n = w.size();
  for (size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return static_cast<long>(n / d);
  }
  return 1;
}

inline std::vector<int> abelianization(const Word& w, int n) {
  std::vector<int> ab(n, 0);
  for (int letter : w) {
    if (letter < n) ++ab[letter];
    else --ab[letter - n];
  }
  return ab;
}

struct Candidate {
  Word canon;
  double trace = 0;
  double length = 0;
  long power_index = 1;
  std::vector<int> ab;
};

}  // namespace detail

// Word enumeration in a discrete cocompact subgroup of SL(2,R): reduced words
// up to max_word letters, grouped into conjugacy classes, lengths from traces.
inline LengthSpectrum enumerate_fuchsian(const std::vector<Mat2>& generators, double max_length,
                                         int max_word) {
  using namespace detail;
  if (generators.empty()) throw input_error("empty generator list");
  if (max_word < 1) throw input_error("max_word must be at least 1");
  int n = static_cast<int>(generators.size());
  std::vector<Mat2> letters(2 * n);
  for (int i = 0; i < n; ++i) {
    letters[i] = generators[i];
    letters[i + n] = generators[i].inverse();
  }

  long skipped = 0;
  std::map<Word, Candidate> by_word;

  int workers = thread_count();
  std::vector<std::map<Word, Candidate>> partial(2 * n);
  std::vector<long> partial_skipped(2 * n, 0);
  std::atomic<int> next_block{0};
  auto run_block = [&](int first_letter) {
    auto& local = partial[first_letter];
    Word word{first_letter};
    std::vector<Mat2> stack{letters[first_letter]};
    // depth-first over reduced words with the given first letter
    std::function<void()> descend = [&]() {
      const Mat2& m = stack.back();
      double tr = std::abs(m.trace());
      if (tr > 2.0 + 1e-12) {
        double l = 2.0 * std::acosh(tr / 2.0);
        if (l <= max_length) {
          Word canon = canonical_rotation(cyclic_reduce(word, n));
          if (!canon.empty() && !local.count(canon)) {
            Candidate c;
            c.canon = canon;
            c.trace = m.trace();
            c.length = l;
            c.power_index = cyclic_period_index(canon);
            c.ab = abelianization(canon, n);
            local.emplace(canon, std::move(c));
          }
        }
      } else {
        ++partial_skipped[first_letter];
      }
      if (static_cast<int>(word.size()) >= max_word) return;
      for (int next = 0; next < 2 * n; ++next) {
        if (next == inverse_letter(word.back(), n)) continue;
        word.push_back(next);
        stack.push_back(stack[stack.size() - 1] * letters[next]);
        descend();
        stack.pop_back();
        word.pop_back();
      }
    };
    descend();
  };
  {
    std::vector<std::thread> pool;
    auto worker = [&]() {
      for (int b = next_block.fetch_add(1); b < 2 * n; b = next_block.fetch_add(1)) run_block(b);
    };
    for (int i = 0; i < std::min(workers, 2 * n); ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (int b = 0; b < 2 * n; ++b) {
    skipped += partial_skipped[b];
    for (auto& [w, c] : partial[b]) by_word.emplace(w, std::move(c));
  }

  // merge free-group classes identified by the surface relation: same
  // abelianized image and same trace within tolerance
  std::vector<Candidate> merged;
  std::vector<Candidate> all;
  all.reserve(by_word.size());
  for (auto& [w, c] : by_word) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    if (x.ab != y.ab) return x.ab < y.ab;
    return x.trace < y.trace;
  });
  for (auto& c : all) {
    if (!merged.empty() && merged.back().ab == c.ab &&
        std::abs(merged.back().trace - c.trace) < 1e-9) {
      merged.back().power_index = std::max(merged.back().power_index, c.power_index);
    } else {
      merged.push_back(c);
    }
  }

  LengthSpectrum out;
  out.space = make_space(Family::RealH, 1);
  out.cutoff_L = max_length;
  out.chi_M = 2 - static_cast<long>(generators.size());  // genus from 2g generators
  out.vol_M = -2.0 * std::numbers::pi * out.chi_M;
  out.skipped_nonhyperbolic = skipped;
  for (const auto& c : merged) {
    GeodesicClass g;
    g.length = c.length;
    g.n_gamma = c.power_index;
    g.primitive = (c.power_index == 1);
    g.holonomy_alpha = {0.0};
    g.holonomy_two_alpha = {};
    out.classes.push_back(g);
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const GeodesicClass& x, const GeodesicClass& y) { return x.length < y.length; });
  return out;
}

// Synthetic spectrum of the cyclic group generated by one hyperbolic element.
inline LengthSpectrum cyclic_spectrum(const SpacePreset& space, double l0, int powers, double vol_M,
                                      long chi_M, std::vector<double> alpha_angles = {},
                                      std::vector<double> two_alpha_angles = {}) {
  LengthSpectrum out;
  out.space = space;
  out.cutoff_L = l0 * powers + 1e-9;
  out.vol_M = vol_M;
  out.chi_M = chi_M;
  if (alpha_angles.empty()) alpha_angles.assign(space.m_alpha, 0.0);
  if (two_alpha_angles.empty()) two_alpha_angles.assign(space.m_2alpha, 0.0);
  for (int k = 1; k <= powers; ++k) {
    GeodesicClass g;
    g.length = l0 * k;
    g.n_gamma = k;
    g.primitive = (k == 1);
    g.holonomy_alpha = alpha_angles;
    for (auto& th : g.holonomy_alpha) th *= k;
    g.holonomy_two_alpha = two_alpha_angles;
    for (auto& th : g.holonomy_two_alpha) th *= k;
    out.classes.push_back(g);
  }
  return out;
}

}  // namespace zetascope
