#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "bessel4/params.hpp"

namespace bessel4 {

// Half-line quadrature with the weight x^{mu+nu+1}: the numerical backbone of
// every integral identity in the library.  Double-exponential (tanh-sinh)
// rule on (split_point, T) in x, plus the substitution x = e^{-s} below the
// split so small-x algebraic behaviour turns into exponential decay in s, plus
// an analytic exponential tail bound beyond T derived from tail_bound_rate.

struct QuadSpec {
  double tol = 1e-10;        // absolute target for |error|
  int max_refine = 10;       // tanh-sinh level cap per region
  double split_point = 1.0;  // boundary between the log branch and the x branch
  double tail_bound_rate = 1.0;  // declared exponential decay rate at infinity
};

struct QuadResult {
  double value;
  double err_est;  // 4x the last two refinement levels' difference + tail bounds
};

struct QuadError : std::runtime_error {
  explicit QuadError(const std::string& what) : std::runtime_error(what) {}
};
// Refinement levels exhausted before the level difference met the target.
struct QuadNonConvergence : QuadError {
  explicit QuadNonConvergence(const std::string& what) : QuadError(what) {}
};
// Integrand samples fail the decay declared in the spec (tail side).
struct QuadDecayViolation : QuadError {
  explicit QuadDecayViolation(const std::string& what) : QuadError(what) {}
};
// Integrand grows too fast towards 0 to be integrable.
struct QuadDivergence : QuadError {
  explicit QuadDivergence(const std::string& what) : QuadError(what) {}
};

using Integrand = std::function<double(double)>;

// Requires |f(x)| <= C x^{sigma-1} near 0 for some sigma > 0 and
// |f(x)| <= C e^{-tail_bound_rate * x} at infinity.
QuadResult integrate_halfline(const Integrand& f, const QuadSpec& spec);

// \int_0^\infty f(x) g(x) x^{mu+nu+1} dx.
double inner_product(const ParamPair& params, const Integrand& f, const Integrand& g,
                     const QuadSpec& spec);

}  // namespace bessel4
