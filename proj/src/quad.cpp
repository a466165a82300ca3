#include "bessel4/quad.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace bessel4 {

namespace {

constexpr long double kPiHalf = 1.57079632679489661923132169163975144L;

void validate(const QuadSpec& spec) {
  if (!(spec.tol > 0.0)) throw std::invalid_argument("QuadSpec: tol must be positive");
  if (spec.max_refine < 1) throw std::invalid_argument("QuadSpec: max_refine must be >= 1");
  if (!(spec.split_point > 0.0))
    throw std::invalid_argument("QuadSpec: split_point must be positive");
  if (!(spec.tail_bound_rate > 0.0))
    throw std::invalid_argument("QuadSpec: tail_bound_rate must be positive");
}

double sample(const Integrand& f, double x, const char* where) {
  const double v = f(x);
  if (!std::isfinite(v))
    throw QuadDivergence(std::string("integrate_halfline: non-finite sample in ") + where +
                         " at x=" + std::to_string(x));
  return v;
}

// One tanh-sinh level on (a, b): sum of w(u_k) f(x(u_k)) over k*h (odd k only
// when odd_only), without the factor h.  Nodes are visited in ascending k so
// the floating-point reduction order is fixed and runs stay bit-reproducible.
long double ts_level(const Integrand& f, double a, double b, double h, bool odd_only,
                     const char* where) {
  const long double half = 0.5L * (static_cast<long double>(b) - static_cast<long double>(a));
  const long double mid = 0.5L * (static_cast<long double>(b) + static_cast<long double>(a));
  const double u_max = 6.11;  // tanh((pi/2) sinh u) reaches 1 ulp short of the endpoints
  const long long kmax = static_cast<long long>(std::floor(u_max / h));
  long double sum = 0.0L;
  for (long long k = -kmax; k <= kmax; ++k) {
    if (odd_only && k % 2 == 0) continue;
    const long double u = static_cast<long double>(k) * static_cast<long double>(h);
    const long double ph = kPiHalf * sinhl(u);
    const long double ch = coshl(ph);
    if (!(ch < 1e150L)) continue;  // weight underflows to 0 past this point
    const long double w = kPiHalf * coshl(u) / (ch * ch);
    if (!(w > 1e-320L)) continue;
    const double x = static_cast<double>(mid + half * tanhl(ph));
    if (!(x > a) || !(x < b)) continue;
    sum += w * static_cast<long double>(sample(f, x, where));
  }
  return sum * half;
}

// Tanh-sinh on (a, b), refined until the difference of consecutive levels is
// at most diff_target.  Returns (value, last level difference).
std::pair<double, double> ts_integrate(const Integrand& f, double a, double b,
                                       double diff_target, int max_refine, const char* where) {
  if (!(b > a)) return {0.0, 0.0};
  double h = 0.5;
  long double acc = ts_level(f, a, b, h, false, where);
  long double prev = acc * static_cast<long double>(h);
  for (int level = 1; level <= max_refine; ++level) {
    h *= 0.5;
    acc += ts_level(f, a, b, h, true, where);
    const long double cur = acc * static_cast<long double>(h);
    const double diff = static_cast<double>(fabsl(cur - prev));
    if (level >= 2 && diff <= diff_target) return {static_cast<double>(cur), diff};
    prev = cur;
  }
  throw QuadNonConvergence(std::string("integrate_halfline: no convergence after max_refine "
                                       "levels in ") +
                           where);
}

}  // namespace

QuadResult integrate_halfline(const Integrand& f, const QuadSpec& spec) {
  validate(spec);
  const double tol = spec.tol;
  const double rate = spec.tail_bound_rate;
  const double split = spec.split_point;

  // --- Truncation point T for the x branch, from the declared decay rate.
  // Model |f(x)| <= A e^{-rate (x - T)} beyond T with A estimated from samples,
  // so the dropped tail is bounded by A / rate.
  double T = split + 4.0 / rate;
  double tail_hi = std::numeric_limits<double>::infinity();
  const double T_cap = split + 1600.0 / rate;
  while (T <= T_cap) {
    const double delta = 0.7 / rate;
    double amp = 0.0;
    for (int k = 0; k <= 3; ++k)
      amp = std::max(amp, std::fabs(sample(f, T + k * delta, "tail sampling")) *
                              std::exp(rate * k * delta));
    tail_hi = amp / rate;
    if (tail_hi <= tol / 10.0) break;
    T = T * 1.35 + 1.0 / rate;
  }
  if (!(tail_hi <= tol / 10.0))
    throw QuadDecayViolation(
        "integrate_halfline: declared tail decay never brings the tail bound below tol/10");

  // Decay-violation probe: compare amplitude near T with amplitude a fixed
  // stretch further out; genuine e^{-rate x} decay (times slowly varying
  // factors) keeps the observed log-slope above 0.4 * rate.
  {
    const double stretch = std::max(6.0 / rate, 0.25 * T);
    const double delta = 0.7 / rate;
    double a0 = 0.0, a1 = 0.0;
    for (int k = 0; k <= 3; ++k) {
      a0 = std::max(a0, std::fabs(sample(f, T + k * delta, "decay probe")));
      a1 = std::max(a1, std::fabs(sample(f, T + stretch + k * delta, "decay probe")));
    }
    if (a1 > 0.0) {
      if (a0 == 0.0)
        throw QuadDecayViolation("integrate_halfline: integrand resurges beyond the tail cut");
      const double slope = std::log(a0 / a1) / stretch;
      if (slope < 0.4 * rate)
        throw QuadDecayViolation("integrate_halfline: observed tail decay is slower than the "
                                 "declared rate");
    }
  }

  // --- Log branch below the split: x = e^{-s} turns |f| <= C x^{sigma-1}
  // into an integrand g(s) = f(e^{-s}) e^{-s} <= C e^{-sigma s}.  Walk s1
  // outward until the empirical decay bounds the remaining s-tail by tol/10.
  const double s0 = -std::log(split);
  auto g = [&f](double s) { return f(std::exp(-s)) * std::exp(-s); };
  double s1 = std::max(s0 + 6.0, 10.0);
  double tail_lo = std::numeric_limits<double>::infinity();
  while (s1 <= 740.0) {
    const double g1 = std::fabs(sample(g, s1, "small-x sampling"));
    const double g0 = std::fabs(sample(g, s1 - 2.0, "small-x sampling"));
    if (g0 == 0.0 && g1 == 0.0) {
      tail_lo = 0.0;
      break;
    }
    if (g1 > 0.0 && g0 > g1) {
      const double sigma = 0.5 * std::log(g0 / g1);
      if (sigma > 1e-3) {
        tail_lo = g1 / sigma;
        if (tail_lo <= tol / 10.0) break;
      }
    }
    s1 = s1 * 1.4 + 2.0;
  }
  if (!(tail_lo <= tol / 10.0))
    throw QuadDivergence(
        "integrate_halfline: integrand does not decay towards 0 in the log variable "
        "(divergence near 0 or sigma too small)");

  // --- The two double-exponential passes.  Each region targets a level
  // difference of tol/16 so 4x the differences plus both tail bounds stays
  // below tol.
  const double diff_target = tol / 16.0;
  const auto lo = ts_integrate(g, s0, s1, diff_target, spec.max_refine, "log branch (0, split)");
  const auto hi = ts_integrate(f, split, T, diff_target, spec.max_refine, "x branch (split, T)");

  QuadResult r;
  r.value = lo.first + hi.first;
  r.err_est = 4.0 * (lo.second + hi.second) + tail_lo + tail_hi;
  return r;
}

double inner_product(const ParamPair& params, const Integrand& f, const Integrand& g,
                     const QuadSpec& spec) {
  validate(spec);
  const double wexp = params.mu_d + params.nu_d + 1.0;
  Integrand h = [&f, &g, wexp](double x) { return f(x) * g(x) * std::pow(x, wexp); };

  // Divergence screen near 0: the integrand must behave like x^{sigma-1} with
  // sigma > 0, i.e. its log-log slope must exceed -1.
  {
    const double xa = 1e-4, xb = 1e-8;
    const double ha = std::fabs(sample(h, xa, "divergence screen"));
    const double hb = std::fabs(sample(h, xb, "divergence screen"));
    if (ha > 0.0 && hb > 0.0) {
      const double slope = (std::log(hb) - std::log(ha)) / (std::log(xb) - std::log(xa));
      if (slope <= -0.999)
        throw QuadDivergence("inner_product: integrand diverges near 0 (weighted small-x "
                             "exponent at or below -1)");
    }
  }
  return integrate_halfline(h, spec).value;
}

}  // namespace bessel4
