#include <bessel4/scalar.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include <quadmath.h>

namespace bessel4 {
namespace {

// ---------------------------------------------------------------------------
// Precision-generic elementary operations (80-bit long double / 128-bit quad).
// The quad tier exists because the defining K-series subtracts two I-series
// that agree to a factor ~e^{2x}; 113 mantissa bits keep the difference
// accurate through the whole series window.
// ---------------------------------------------------------------------------
struct OpsLD {
  using F = long double;
  static F pi() { return 3.141592653589793238462643383279502884L; }
  static F log(F x) { return ::logl(x); }
  static F exp(F x) { return ::expl(x); }
  static F sin(F x) { return ::sinl(x); }
  static F sqrt(F x) { return ::sqrtl(x); }
  static F pow(F b, F e) { return ::powl(b, e); }
  static F floor(F x) { return ::floorl(x); }
  static F abs(F x) { return ::fabsl(x); }
  static F eps() { return 1e-20L; }
  static int gamma_shift() { return 26; }
  static int gamma_terms() { return 10; }
};
struct OpsQ {
  using F = __float128;
  static F pi() { return M_PIq; }
  static F log(F x) { return ::logq(x); }
  static F exp(F x) { return ::expq(x); }
  static F sin(F x) { return ::sinq(x); }
  static F sqrt(F x) { return ::sqrtq(x); }
  static F pow(F b, F e) { return ::powq(b, e); }
  static F floor(F x) { return ::floorq(x); }
  static F abs(F x) { return ::fabsq(x); }
  static F eps() { return F(1e-35); }
  static int gamma_shift() { return 55; }
  static int gamma_terms() { return 11; }
};

// Stirling-series coefficients B_{2n} / (2n(2n-1)) as exact integer ratios.
constexpr long long kBernNum[11] = {1, -1, 1, -1, 1, -691, 1, -3617, 43867, -174611, 854513};
constexpr long long kBernDen[11] = {12, 360, 1260, 1680, 1188, 360360, 156, 122400, 244188, 125400, 63756};

// sin(pi z) with exact integer reduction (arguments are dyadic).
template <class Ops>
typename Ops::F sinpi(typename Ops::F z) {
  using F = typename Ops::F;
  F n = Ops::floor(z);
  F r = z - n;
  bool neg = ::fmodl(static_cast<long double>(n), 2.0L) != 0.0L;
  if (r > F(0.5)) r = F(1) - r;  // mirror for accuracy near the upper end
  F s = Ops::sin(Ops::pi() * r);
  return neg ? -s : s;
}

// Gamma for z >= 0.5: shift up, Stirling series, shift back down.
template <class Ops>
typename Ops::F gamma_positive(typename Ops::F z) {
  using F = typename Ops::F;
  F shift(1);
  F zz = z;
  while (zz < F(Ops::gamma_shift())) {
    shift *= zz;
    zz += F(1);
  }
  F lg = (zz - F(0.5)) * Ops::log(zz) - zz + F(0.5) * Ops::log(F(2) * Ops::pi());
  F z2 = zz * zz;
  F zp = zz;
  for (int n = 0; n < Ops::gamma_terms(); ++n) {
    lg += (F(kBernNum[n]) / F(kBernDen[n])) / zp;
    zp *= z2;
  }
  return Ops::exp(lg) / shift;
}

// Full real-line 1/Gamma; entire (0 at the poles).
template <class Ops>
typename Ops::F rgamma_impl(typename Ops::F z) {
  using F = typename Ops::F;
  if (z >= F(0.5)) return F(1) / gamma_positive<Ops>(z);
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  return sinpi<Ops>(z) * gamma_positive<Ops>(F(1) - z) / Ops::pi();
}

template <class Ops>
typename Ops::F gamma_impl(typename Ops::F z) {
  using F = typename Ops::F;
  if (z >= F(0.5)) return gamma_positive<Ops>(z);
  F s = sinpi<Ops>(z);
  if (s == F(0)) throw std::domain_error("gamma pole at nonpositive integer");
  return Ops::pi() / (s * gamma_positive<Ops>(F(1) - z));
}

// Defining series of the normalized I-Bessel function:
//   I~_a(x) = sum_n (x/2)^{2n} / (n! Gamma(n+a+1)).
// Handles negative-integer a (leading reciprocal-Gamma zeros skipped).
template <class Ops>
typename Ops::F itilde_series_impl(typename Ops::F alpha, typename Ops::F x) {
  using F = typename Ops::F;
  F q = (x / F(2)) * (x / F(2));
  long long n0 = 0;
  F t;
  F r0 = rgamma_impl<Ops>(alpha + F(1));
  if (r0 == F(0)) {
    // a = -m, m a positive integer: first nonzero term at n = m.
    long long m = static_cast<long long>(static_cast<long double>(-alpha));
    n0 = m;
    F tm(1);
    for (long long k = 1; k <= m; ++k) tm *= q / F(k);  // q^m / m!, Gamma(1) = 1
    t = tm;
  } else {
    t = r0;
  }
  F sum = t;
  for (long long n = n0; n < n0 + 400; ++n) {
    t *= q / ((F(n) + F(1)) * (F(n) + alpha + F(1)));
    sum += t;
    if (Ops::abs(t) <= Ops::eps() * Ops::abs(sum) && n > n0 + 4) break;
  }
  return sum;
}

// K~ by the defining sine formula, quad precision, alpha not an integer:
//   K~_a(x) = pi / (2 sin(pi a)) * ( (x/2)^{-2a} I~_{-a}(x) - I~_a(x) ).
__float128 ktilde_sine_q(__float128 alpha, __float128 x) {
  __float128 head = powq(x / 2, -2 * alpha) * itilde_series_impl<OpsQ>(-alpha, x);
  __float128 tail = itilde_series_impl<OpsQ>(alpha, x);
  return M_PIq / (2 * sinq(M_PIq * alpha)) * (head - tail);
}

// Hankel asymptotic coefficients A_k(a) = prod_{i<=k} (4a^2-(2i-1)^2) / (k! 8^k),
// summed with the requested sign pattern until the terms stop decreasing.
long double hankel_sum(long double alpha, long double x, int sign_period) {
  // sign_period: 0 -> all +  (K), 1 -> alternating (I)
  long double mu = 4.0L * alpha * alpha;
  long double term = 1.0L, sum = 1.0L, prev = std::numeric_limits<long double>::max();
  for (int k = 1; k <= 40; ++k) {
    long double num = mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
    term *= num / (8.0L * k * x);
    if (std::fabs(term) >= prev) break;  // divergence onset: stop at smallest term
    prev = std::fabs(term);
    sum += (sign_period == 1 && (k & 1)) ? -term : term;
    if (std::fabs(term) < 1e-19L * std::fabs(sum)) break;
  }
  return sum;
}

long double ktilde_asympt_ld(long double alpha, long double x) {
  if (alpha < 0) return powl(x / 2, -2 * alpha) * ktilde_asympt_ld(-alpha, x);
  const long double kDirect = 4.5L;
  if (alpha <= kDirect) {
    long double s = hankel_sum(alpha, x, 0);
    return sqrtl(OpsLD::pi() / (2 * x)) * expl(-x) * powl(x / 2, -alpha) * s;
  }
  // climb with the stable three-term recurrence from two low-order anchors
  long double f = alpha - floorl(alpha);
  long double b = f + 3.0L;                  // in [3,4)
  long long steps = llroundl(alpha - b);     // integer by construction
  long double km1 = ktilde_asympt_ld(b - 1, x);
  long double k0 = ktilde_asympt_ld(b, x);
  long double q = (x / 2) * (x / 2);
  for (long long s = 0; s < steps; ++s) {
    long double kp = (b + s) * k0 / q + km1 / q;
    km1 = k0;
    k0 = kp;
  }
  return k0;
}

long double itilde_asympt_ld(long double alpha, long double x) {
  const long double kDirect = 6.0L;
  if (alpha <= kDirect) {
    long double s = hankel_sum(alpha, x, 1);
    return expl(x) / sqrtl(2 * OpsLD::pi() * x) * powl(x / 2, -alpha) * s;
  }
  // Miller's downward recurrence, normalized at a low, directly-computable order
  long double f = alpha - floorl(alpha);
  long double b0 = f + 2.0L;  // in [2,3)
  long long lo = 0;           // index of order b0
  long long hi = llroundl(alpha - b0) + 24 + static_cast<long long>(x / 2);
  long long target = llroundl(alpha - b0);
  std::vector<long double> v(hi + 2, 0.0L);
  v[hi + 1] = 0.0L;
  v[hi] = 1e-240L;
  long double q = (x / 2) * (x / 2);
  for (long long i = hi; i > lo; --i) {
    // order at index i is b0 + i
    v[i - 1] = (b0 + i) * v[i] + q * v[i + 1];
    if (v[i - 1] > 1e390L) {
      for (long long j = i - 1; j <= hi + 1; ++j) v[j] *= 1e-240L;
    }
  }
  long double anchor = itilde_asympt_ld(b0, x);
  return v[target] / v[lo] * anchor;
}

bool integer_of(double a, long long* out) {
  if (std::floor(a) != a || std::fabs(a) > 1e15) return false;
  *out = static_cast<long long>(a);
  return true;
}

}  // namespace

bool half_integer_of(double a, HalfInt* out) {
  double t = 2 * a;
  if (std::floor(t) != t || std::fabs(t) > 1e15) return false;
  long long tt = static_cast<long long>(t);
  if (tt % 2 == 0) return false;
  if (out) out->twice_value = tt;
  return true;
}

double gamma_fn(double z) {
  long long n;
  if (integer_of(z, &n) && n <= 0) throw std::domain_error("gamma pole at nonpositive integer");
  return static_cast<double>(gamma_impl<OpsLD>(static_cast<long double>(z)));
}

double rgamma_fn(double z) {
  return static_cast<double>(rgamma_impl<OpsLD>(static_cast<long double>(z)));
}

double pochhammer(double a, long long n) {
  long double p = 1.0L;
  for (long long k = 0; k < n; ++k) p *= (static_cast<long double>(a) + k);
  return static_cast<double>(p);
}

double bessel_i_tilde_series(double alpha, double x) {
  return static_cast<double>(
      itilde_series_impl<OpsLD>(static_cast<long double>(alpha), static_cast<long double>(std::fabs(x))));
}

double bessel_i_tilde_asympt(double alpha, double x) {
  return static_cast<double>(itilde_asympt_ld(alpha, std::fabs(x)));
}

double bessel_i_tilde(double alpha, double x) {
  double ax = std::fabs(x);  // entire and even in x
  if (ax <= kIBesselSwitch) return bessel_i_tilde_series(alpha, ax);
  return bessel_i_tilde_asympt(alpha, ax);
}

namespace {

// Exact elementary form for half-integer order a = h + 1/2, h >= 0:
//   K~_a(x) = sqrt(pi) x^{-2a} e^{-x} sum_{i=0}^{h} (2h-i)!/((h-i)! i!) (2x)^i.
long double ktilde_halfint_ld(long long h, long double x) {
  long double sum = 0.0L;
  long double c = 1.0L;  // (2h-i)! / ((h-i)! i!) at i=0: (2h)!/h!
  for (long long k = 0; k < h; ++k) c *= (h + 1 + k);
  long double p = 1.0L;
  for (long long i = 0; i <= h; ++i) {
    sum += c * p;
    p *= 2 * x;
    if (i < h) c *= static_cast<long double>(h - i) / ((2 * h - i) * (i + 1));
  }
  long double a = h + 0.5L;
  return sqrtl(OpsLD::pi()) * powl(x, -2 * a) * expl(-x) * sum;
}

double ktilde_series_dispatch(double alpha, double x) {
  long long n;
  if (integer_of(alpha, &n)) {
    // eps-limit of the sine formula with one Richardson step
    const __float128 qx = x;
    auto sym = [&](double e) {
      return (ktilde_sine_q(__float128(alpha) + __float128(e), qx) +
              ktilde_sine_q(__float128(alpha) - __float128(e), qx)) /
             2;
    };
    const double eps = 1e-6;
    __float128 g1 = sym(eps), g2 = sym(eps / 2);
    return static_cast<double>((4 * g2 - g1) / 3);
  }
  return static_cast<double>(ktilde_sine_q(__float128(alpha), __float128(x)));
}

}  // namespace

double bessel_k_tilde_series(double alpha, double x) { return ktilde_series_dispatch(alpha, x); }

double bessel_k_tilde_asympt(double alpha, double x) {
  return static_cast<double>(ktilde_asympt_ld(static_cast<long double>(alpha), static_cast<long double>(x)));
}

double bessel_k_tilde(double alpha, double x) {
  if (!(x > 0)) throw std::domain_error("K~ needs x > 0");
  HalfInt h;
  if (half_integer_of(alpha, &h)) {
    long double lx = x;
    if (h.twice_value >= 1) return static_cast<double>(ktilde_halfint_ld((h.twice_value - 1) / 2, lx));
    // negative half-integer: K~_{-a}(x) = (x/2)^{2a} K~_a(x) with a = -alpha > 0
    long double a = -static_cast<long double>(alpha);
    return static_cast<double>(powl(lx / 2, 2 * a) * ktilde_halfint_ld(static_cast<long long>(a - 0.5L), lx));
  }
  if (x > kKBesselSwitch) return bessel_k_tilde_asympt(alpha, x);
  return bessel_k_tilde_series(alpha, x);
}

namespace {

// Ascending J-series in quad precision (the alternating sum cancels ~e^{x}).
double bessel_j_series_q(double alpha, double x) {
  __float128 q = __float128(x) / 2;
  q = -q * q;
  __float128 t;
  if (x == 0) return alpha == 0 ? 1.0 : 0.0;
  t = powq(__float128(x) / 2, __float128(alpha)) * rgamma_impl<OpsQ>(__float128(alpha) + 1);
  __float128 sum = t;
  for (int n = 0; n < 400; ++n) {
    t *= q / ((__float128(n) + 1) * (__float128(n) + __float128(alpha) + 1));
    sum += t;
    if (fabsq(t) <= OpsQ::eps() * fabsq(sum) && n > 4) break;
  }
  return static_cast<double>(sum);
}

double bessel_j_asympt_ld(double alpha, double x) {
  // Hankel expansion: J_a(x) = sqrt(2/(pi x)) (P cos w - Q sin w),
  // w = x - a pi/2 - pi/4.
  long double a = alpha, lx = x;
  long double mu = 4.0L * a * a;
  long double P = 1.0L, Q = 0.0L;
  long double term = 1.0L;
  long double prev = std::numeric_limits<long double>::max();
  for (int k = 1; k <= 40; ++k) {
    term *= (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * lx);
    if (std::fabs(term) >= prev) break;
    prev = std::fabs(term);
    long double signed_term = ((k / 2) % 2 == 0 ? term : -term);
    if (k & 1)
      Q += signed_term;
    else
      P += signed_term;
    if (std::fabs(term) < 1e-19L * (std::fabs(P) + std::fabs(Q))) break;
  }
  long double w = lx - a * OpsLD::pi() / 2 - OpsLD::pi() / 4;
  return static_cast<double>(sqrtl(2 / (OpsLD::pi() * lx)) * (P * cosl(w) - Q * sinl(w)));
}

}  // namespace

double bessel_j(double alpha, double x) {
  if (x < 0 || alpha < 0) throw std::domain_error("J implemented for alpha >= 0, x >= 0");
  if (x <= kJBesselSwitch) return bessel_j_series_q(alpha, x);
  if (alpha <= 6.0) return bessel_j_asympt_ld(alpha, x);
  // stable upward recurrence while the order stays below the argument
  double f = alpha - std::floor(alpha);
  double b = f + 5.0;
  long long steps = llround(alpha - b);
  double jm1 = bessel_j_asympt_ld(b - 1, x);
  double j0 = bessel_j_asympt_ld(b, x);
  for (long long s = 0; s < steps; ++s) {
    double jp = 2 * (b + s) / x * j0 - jm1;
    jm1 = j0;
    j0 = jp;
  }
  return j0;
}

double laguerre(long long n, double alpha, double x) {
  if (n < 0) throw std::domain_error("Laguerre degree must be nonnegative");
  // c_0 = (alpha+1)_n / n!; c_{k+1} = c_k * (-(n-k)) / ((k+1)(alpha+k+1))
  // The alternating sum cancels; accumulate in quad precision.
  __float128 c = 1;
  for (long long k = 0; k < n; ++k) c *= (__float128(alpha) + 1 + k) / (k + 1);
  __float128 sum = 0, xp = 1;
  for (long long k = 0; k <= n; ++k) {
    sum += c * xp;
    xp *= __float128(x);
    if (k < n) {
      __float128 den = __float128(k + 1) * (__float128(alpha) + k + 1);
      if (den == 0) throw std::domain_error("Laguerre parameter pole");
      c *= -__float128(n - k) / den;
    }
  }
  return static_cast<double>(sum);
}

std::vector<Rat> laguerre_coeffs_rat(long long n, const Rat& alpha) {
  std::vector<Rat> c(n + 1);
  Rat cur = rat_pochhammer(alpha + 1, n) / rat_factorial(n);
  for (long long k = 0; k <= n; ++k) {
    c[k] = cur;
    if (k < n) {
      Rat den = Rat(k + 1) * (alpha + k + 1);
      if (den == 0) throw std::domain_error("Laguerre parameter pole");
      cur *= Rat(-(n - k)) / den;
    }
  }
  return c;
}

Rat laguerre_rat(long long n, const Rat& alpha, const Rat& x) {
  auto c = laguerre_coeffs_rat(n, alpha);
  Rat sum(0), xp(1);
  for (long long k = 0; k <= n; ++k) {
    sum += c[k] * xp;
    xp *= x;
  }
  return sum;
}

double gegenbauer_tilde(long long n, double lambda, double z) {
  if (!(lambda > 0)) throw std::domain_error("Gegenbauer parameter must be positive");
  // C~_n^l(z) = sum_k (-1)^k Gamma(l+k) Gamma(n+2l+k) / (k! (n-k)! Gamma(2l+2k)) (2(1-z))^k
  long double u = 2 * (1.0L - static_cast<long double>(z));
  long double sum = 0.0L;
  long double lam = lambda;
  for (long long k = 0; k <= n; ++k) {
    long double t = gamma_impl<OpsLD>(lam + k) * gamma_impl<OpsLD>(n + 2 * lam + k) /
                    (gamma_impl<OpsLD>(static_cast<long double>(k + 1)) *
                     gamma_impl<OpsLD>(static_cast<long double>(n - k + 1)) *
                     gamma_impl<OpsLD>(2 * lam + 2 * k));
    long double up = powl(u, static_cast<long double>(k));
    sum += ((k & 1) ? -t : t) * up;
  }
  return static_cast<double>(sum);
}

}  // namespace bessel4
