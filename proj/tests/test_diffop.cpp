#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bessel4/diffop.hpp>
#include <bessel4/scalar.hpp>

#include <cmath>
#include <vector>

using namespace bessel4;

namespace {

DerivStack stack_mono(double a, double x) {
  DerivStack s;
  s.u0 = std::pow(x, a);
  s.u1 = a * std::pow(x, a - 1);
  s.u2 = a * (a - 1) * std::pow(x, a - 2);
  s.u3 = a * (a - 1) * (a - 2) * std::pow(x, a - 3);
  s.u4 = a * (a - 1) * (a - 2) * (a - 3) * std::pow(x, a - 4);
  return s;
}

// D on a pure power, from the factored form: the Euler factors act on x^a as
// theta(theta+nu) -> a(a+nu) etc., so
//   D x^a = a(a+nu)(a+mu+nu)(a+mu) x^{a-2}
//           - [a(a+nu) + (a+2+mu+nu)(a+2+mu)] x^a + x^{a+2}.
double d_mono_ref(double m, double n, double a, double x) {
  const double lead = a * (a + n) * (a + m + n) * (a + m);
  const double mid = a * (a + n) + (a + 2 + m + n) * (a + 2 + m);
  return lead * std::pow(x, a - 2) - mid * std::pow(x, a) + std::pow(x, a + 2);
}

BesselCombo<Rat> ktilde_combo(long long nu_num, long long nu_den) {
  BesselCombo<Rat> c;
  c.base_order = Rat(nu_num) / Rat(2 * nu_den);
  c.terms.push_back({BKind::K, 0, 0, Rat(1)});
  return c;
}

// S_{mu,-1} as a symbolic combo operation: (theta(theta+mu) - x^2) u, then x^{-1}.
BesselCombo<Rat> s_minus_combo(const BesselCombo<Rat>& u, const Rat& mu) {
  auto t1 = combo_theta(u);
  auto t2 = combo_theta(t1);
  auto res = combo_linear(Rat(1), t2, mu, t1);
  res = combo_linear(Rat(1), res, Rat(-1), combo_mul_x2(u));
  return combo_scale_monomial(res, -1, Rat(1));
}

}  // namespace

TEST_CASE("expanded operator matches the factored form on pure powers") {
  const double mus[] = {2.0, 0.5, 3.0, 1.0};
  const double nus[] = {-1.0, 0.0, 1.0, 2.5};
  const double as[] = {0.0, 1.0, 2.0, 3.5, -0.5, 5.0};
  const double xs[] = {0.3, 1.0, 2.7};
  for (int pi = 0; pi < 4; ++pi) {
    ParamPair p = ParamPair::of_doubles(mus[pi], nus[pi]);
    for (double a : as)
      for (double x : xs) {
        const double got = apply_D(p, x, stack_mono(a, x));
        const double ref = d_mono_ref(mus[pi], nus[pi], a, x);
        const double scale = std::fabs(ref) + std::pow(x, a) + 1.0;
        CHECK(std::fabs(got - ref) <= 1e-11 * scale);
      }
  }
}

TEST_CASE("indicial exponents kill the singular coefficient") {
  ParamPair p = ParamPair::of_doubles(2.5, 0.5);
  auto roots = indicial_exponents(p);
  CHECK(roots[0] == 0.0);
  CHECK(roots[1] == -0.5);
  CHECK(roots[2] == -2.5);
  CHECK(roots[3] == -3.0);
  // The x^{a-2} part of D x^a is a(a+nu)(a+mu+nu)(a+mu); it vanishes exactly
  // at the four indicial exponents and nowhere nearby.
  auto euler = [&](double a) {
    return a * (a + 0.5) * (a + 3.0) * (a + 2.5);
  };
  for (double r : roots) {
    CHECK(euler(r) == 0.0);
    CHECK(std::fabs(euler(r + 0.1)) > 1e-3);
  }
}

TEST_CASE("swapping the parameters shifts the operator by a constant") {
  // D_{nu,mu} u - D_{mu,nu} u = (mu-nu)(mu+nu+2) u.
  const double pairs[][2] = {{2.0, -1.0}, {3.0, 0.5}, {0.5, 0.0}, {5.0, 3.0}};
  for (auto& mn : pairs) {
    ParamPair p = ParamPair::of_doubles(mn[0], mn[1]);
    ParamPair q = ParamPair::of_doubles(mn[1], mn[0]);
    const double shift = (mn[0] - mn[1]) * (mn[0] + mn[1] + 2.0);
    auto u = ktilde_combo(1, 3);  // K~_{1/6}: a generic smooth function
    for (double x : {0.4, 1.0, 2.2, 6.0}) {
      auto s = combo_stack(u, x);
      const double lhs = apply_D(q, x, s) - apply_D(p, x, s);
      const double ref = shift * s.u0;
      CHECK(std::fabs(lhs - ref) <= 1e-9 * (std::fabs(ref) + x * x * std::fabs(s.u2) + 1.0));
    }
  }
}

TEST_CASE("nu = -1 factorization through S") {
  // D_{mu,-1} = S_{mu,-1}^2 - (mu+1)^2.
  const Rat mu = Rat(5) / 2;
  ParamPair p = ParamPair::of(5, 2, -1, 1);
  auto u = ktilde_combo(-1, 1);
  auto su = s_minus_combo(u, mu);
  for (double x : {0.5, 1.3, 3.0}) {
    auto us = combo_stack(u, x);
    auto vs = combo_stack(su, x);
    const double lhs = apply_D(p, x, us);
    const double rhs = apply_S(p, -1, x, vs) - 3.5 * 3.5 * us.u0;
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * (std::fabs(lhs) + std::fabs(rhs) + 1.0));
  }
}

TEST_CASE("conjugation identity between the two S variants") {
  // S_{mu,+1} x^{-1} u = x^{-1} S_{mu,-1} u.
  ParamPair p = ParamPair::of(7, 4, -1, 1);
  auto u = ktilde_combo(2, 5);
  auto v = combo_scale_monomial(u, -1, Rat(1));
  for (double x : {0.6, 1.7, 4.0}) {
    auto us = combo_stack(u, x);
    auto vs = combo_stack(v, x);
    const double lhs = apply_S(p, +1, x, vs);
    const double rhs = apply_S(p, -1, x, us) / x;
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * (std::fabs(rhs) + 1.0));
  }
}

TEST_CASE("H acts on powers as multiplication by the shifted exponent") {
  ParamPair p = ParamPair::of_doubles(2.0, -1.0);  // (mu+nu+2)/2 = 3/2
  for (double a : {0.0, 1.0, 2.5})
    for (double x : {0.7, 2.0}) {
      auto s = stack_mono(a, x);
      CHECK(apply_H(p, x, s.u0, s.u1) == doctest::Approx((a + 1.5) * s.u0).epsilon(1e-13));
    }
}

TEST_CASE("eigenvalue sequence") {
  ParamPair p = ParamPair::of_doubles(2.0, 0.0);
  CHECK(eigenvalue_D(p, 0) == 0.0);
  CHECK(eigenvalue_D(p, 1) == 16.0);
  CHECK(eigenvalue_D(p, 2) == 40.0);
  ParamPair q = ParamPair::of_doubles(3.0, 1.0);
  CHECK(eigenvalue_D(q, -1) == -12.0);  // families 3,4 admit negative j
}
