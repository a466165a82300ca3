#pragma once
// Pointwise evaluation of the classical special functions the rest of the
// library is built from: Gamma, Pochhammer, normalized modified Bessel
// functions  I~_a(x) = (x/2)^{-a} I_a(x)  and  K~_a(x) = (x/2)^{-a} K_a(x),
// the classical J-Bessel function, generalized Laguerre polynomials, and
// normalized Gegenbauer polynomials  C~_n^l = Gamma(l) C_n^l.
//
// Accuracy contracts (relative, on the stated windows):
//   gamma_fn        1e-14 on (0, 50]
//   bessel_i_tilde  1e-12 on (0, 60]
//   bessel_k_tilde  1e-11 on (1e-3, 60]
//   bessel_j        1e-10 on [0, 200] (measured against the amplitude envelope
//                   near zeros of the oscillation)

#include <bessel4/rational.hpp>

#include <vector>

namespace bessel4 {

// Half-integer order marker: represents a where 2a is an odd integer; used to
// dispatch the exact elementary closed form of K~.
struct HalfInt {
  long long twice_value = 0;
};

// True iff 2a is exactly an odd integer (doubles store dyadics exactly).
bool half_integer_of(double a, HalfInt* out);

// Euler Gamma on the real line; throws std::domain_error at poles.
double gamma_fn(double z);

// 1/Gamma, entire (returns 0 at the poles of Gamma).
double rgamma_fn(double z);

// Pochhammer symbol (a)_n.
double pochhammer(double a, long long n);

// Normalized modified Bessel function of the first kind, entire in x.
double bessel_i_tilde(double alpha, double x);

// Normalized modified Bessel function of the third kind, x > 0.
//  - half-integer alpha: exact elementary closed form (all x)
//  - other alpha: defining series below the switch point, large-x asymptotic
//    series above; exact integer orders via an eps-limit with Richardson
//    extrapolation
double bessel_k_tilde(double alpha, double x);

// Individual evaluation branches, exposed so the switch-point overlap bands
// can be tested for agreement.
double bessel_i_tilde_series(double alpha, double x);
double bessel_i_tilde_asympt(double alpha, double x);
double bessel_k_tilde_series(double alpha, double x);
double bessel_k_tilde_asympt(double alpha, double x);

// Classical Bessel function of the first kind, alpha >= 0, x >= 0.
double bessel_j(double alpha, double x);

// Generalized Laguerre polynomial L_n^alpha(x).
double laguerre(long long n, double alpha, double x);

// Monomial coefficients of L_n^alpha, exact.
std::vector<Rat> laguerre_coeffs_rat(long long n, const Rat& alpha);

// Exact evaluation for rational inputs.
Rat laguerre_rat(long long n, const Rat& alpha, const Rat& x);

// Normalized Gegenbauer polynomial C~_n^lambda(z) = Gamma(lambda) C_n^lambda(z),
// lambda > 0.
double gegenbauer_tilde(long long n, double lambda, double z);

// Switch points between series and asymptotic evaluation (exposed so tests can
// probe the mandated overlap bands).
inline constexpr double kIBesselSwitch = 30.0;
inline constexpr double kKBesselSwitch = 14.0;  // see README design notes
inline constexpr double kJBesselSwitch = 30.0;

}  // namespace bessel4
