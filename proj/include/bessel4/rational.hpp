#pragma once
// Exact rational scalar used by the coefficient-level algebra.
//
// Every IEEE double is a dyadic rational, so conversion from double is exact;
// parameters like mu = 1.5 therefore enter the exact layer with no rounding.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bessel4 {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline long double rat_to_ld(const Rat& r) {
  return numerator(r).template convert_to<long double>() /
         denominator(r).template convert_to<long double>();
}

inline Rat rat_of(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

// Exact conversion: decompose the double into mantissa * 2^exp.
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
  // 53 bits suffice for the mantissa
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rat r(mant);
  if (exp >= 0) {
    r *= Rat(BigInt(1) << exp);
  } else {
    r /= Rat(BigInt(1) << (-exp));
  }
  return r;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

// r integral and r <= 0 (Gamma poles etc.)
inline bool is_nonpos_integer(const Rat& r) { return is_integer(r) && r <= 0; }

inline long long rat_to_ll(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("rational is not an integer");
  return numerator(r).template convert_to<long long>();
}

// Pochhammer symbol (a)_n = a(a+1)...(a+n-1), exact.
inline Rat rat_pochhammer(const Rat& a, long long n) {
  Rat p(1);
  for (long long k = 0; k < n; ++k) p *= (a + k);
  return p;
}

inline Rat rat_factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Rat p(1);
  for (long long k = 2; k <= n; ++k) p *= k;
  return p;
}

// Binomial coefficient C(n, k) for integer n >= 0.
inline Rat rat_binomial(long long n, long long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat p(1);
  for (long long i = 0; i < k; ++i) p = p * (n - i) / (i + 1);
  return p;
}

// Generalized binomial series coefficient of (1-t)^{-a}: (a)_k / k!.
inline Rat rat_binom_series(const Rat& a, long long k) {
  return rat_pochhammer(a, k) / rat_factorial(k);
}

inline Rat rat_pow(const Rat& base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("zero to negative power");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat r(1), b = base;
  long long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bessel4
