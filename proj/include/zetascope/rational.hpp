#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

#include "errors.hpp"

namespace zetascope {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// Fractional part normalized into [0, 1).
inline Rat frac_mod1(const Rat& x) {
  BigInt num = numerator(x), den = denominator(x);
  BigInt q = num / den;
  Rat f = x - Rat(q);
  if (f < 0) f += 1;
  return f;
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Serialized form used in JSON: "a" or "a/b".
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw input_error("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    throw input_error("malformed rational: " + s);
  }
}

inline long to_long_exact(const Rat& r) {
  if (!is_integer(r)) throw input_error("expected integer, got " + rat_to_string(r));
  return numerator(r).convert_to<long>();
}

}  // namespace zetascope
