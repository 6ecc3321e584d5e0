#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "rational.hpp"

namespace zetascope {

// Dense polynomial over exact rationals, coefficients in ascending powers.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  // a*x + b
  static Poly linear(const Rat& a, const Rat& b) { return Poly({b, a}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  bool is_zero() const { return c_.empty(); }

  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
  }

  // Exact division by x; requires zero constant term.
  Poly divide_by_x() const {
    if (c_.empty()) return Poly();
    if (c_[0] != 0) throw input_error("polynomial has nonzero constant term, not divisible by x");
    return Poly(std::vector<Rat>(c_.begin() + 1, c_.end()));
  }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }
  cplx eval(const cplx& x) const {
    cplx v(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
    return v;
  }
  double eval(double x) const { return eval(cplx(x, 0)).real(); }

  // P(a*x + b) expanded exactly.
  Poly compose_linear(const Rat& a, const Rat& b) const {
    Poly result, lin = linear(a, b), pow = constant(Rat(1));
    for (size_t i = 0; i < c_.size(); ++i) {
      result = result + pow * c_[i];
      pow = pow * lin;
    }
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Complex-coefficient copy of P(a*x + b), used when the shift is not rational.
inline std::vector<cplx> compose_linear_complex(const Poly& p, const cplx& a, const cplx& b) {
  std::vector<cplx> result(std::max<size_t>(p.coeffs().size(), 1), cplx(0));
  std::vector<cplx> pow{cplx(1)};
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    double ci = to_double(p.coeffs()[i]);
    for (size_t j = 0; j < pow.size(); ++j) result[j] += ci * pow[j];
    // pow *= (a x + b)
    std::vector<cplx> next(pow.size() + 1, cplx(0));
    for (size_t j = 0; j < pow.size(); ++j) {
      next[j] += pow[j] * b;
      next[j + 1] += pow[j] * a;
    }
    pow = std::move(next);
  }
  result.resize(p.coeffs().size() ? p.coeffs().size() : 1, cplx(0));
  return result;
}

// Quotient of two rational polynomials in one variable; supports the derivation
// R -> s * w * dR/dw used when differentiating functions of w = exp(s0 * t).
struct RatFn {
  Poly num, den;  // den never zero

  static RatFn from_poly(Poly p) { return {std::move(p), Poly::constant(Rat(1))}; }

  RatFn w_derivative_scaled(const Rat& s) const {
    // s * w * (num' den - num den') / den^2
    Poly w = Poly::linear(Rat(1), Rat(0));
    Poly n = (num.derivative() * den - num * den.derivative()) * s * w;
    return {n, den * den};
  }

  cplx eval(const cplx& w) const { return num.eval(w) / den.eval(w); }
};

// Finite Laurent series with exact rational coefficients:
//   sum_{k>=lowest} c[k-lowest] * t^k, truncated above `highest()`.
class Laurent {
 public:
  Laurent() : lowest_(0) {}
  Laurent(int lowest, std::vector<Rat> coeffs) : lowest_(lowest), c_(std::move(coeffs)) {}

  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const {
    int i = k - lowest_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
  }

  Laurent derivative() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * Rat(lowest_ + static_cast<long>(i));
    Laurent out(lowest_ - 1, std::move(r));
    out.trim_low();
    return out;
  }

  Laurent operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return Laurent(lowest_, std::move(r));
  }

  Laurent operator+(const Laurent& o) const {
    int lo = std::min(lowest_, o.lowest_);
    int hi = std::min(highest(), o.highest());  // truncation order: common reliable range
    if (c_.empty()) return o;
    if (o.c_.empty()) return *this;
    std::vector<Rat> r(hi - lo + 1, Rat(0));
    for (int k = lo; k <= hi; ++k) r[k - lo] = coeff(k) + o.coeff(k);
    return Laurent(lo, std::move(r));
  }

  // Product truncated to the reliable common order.
  Laurent operator*(const Laurent& o) const {
    if (c_.empty() || o.c_.empty()) return Laurent();
    int lo = lowest_ + o.lowest_;
    int hi = std::min(highest() + o.lowest_, o.highest() + lowest_);
    std::vector<Rat> r(hi - lo + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) {
        int k = lowest_ + static_cast<int>(i) + o.lowest_ + static_cast<int>(j);
        if (k <= hi) r[k - lo] += c_[i] * o.c_[j];
      }
    return Laurent(lo, std::move(r));
  }

  // Multiplicative inverse of a series with nonzero leading coefficient.
  Laurent inverse(int terms) const {
    if (c_.empty() || c_[0] == 0) throw input_error("Laurent inverse needs nonzero leading coefficient");
    std::vector<Rat> r(terms, Rat(0));
    r[0] = Rat(1) / c_[0];
    for (int k = 1; k < terms; ++k) {
      Rat s(0);
      for (int j = 1; j <= k; ++j) s += coeff(lowest_ + j) * r[k - j];
      r[k] = -s / c_[0];
    }
    return Laurent(-lowest_, std::move(r));
  }

 private:
  void trim_low() {
    while (!c_.empty() && c_.front() == 0) {
      c_.erase(c_.begin());
      ++lowest_;
    }
  }
  int lowest_;
  std::vector<Rat> c_;
};

}  // namespace zetascope
