// The fourth-order operator
//
//   D = (1/x^2) ((theta+mu+nu)(theta+mu) - x^2) (theta(theta+nu) - x^2),
//   theta = x d/dx,
//
// its first-order-in-theta factors S, and the shift operator H.  Everything
// acts pointwise on a stack of derivative values.
#pragma once

#include <bessel4/combo.hpp>
#include <bessel4/params.hpp>

#include <array>

namespace bessel4 {

struct DerivStack {
  double u0 = 0, u1 = 0, u2 = 0, u3 = 0, u4 = 0;  // u, u', u'', u''', u''''
};

// Derivative stack of a Bessel combination via exact symbolic differentiation.
template <class C>
DerivStack combo_stack(const BesselCombo<C>& c, double x) {
  DerivStack s;
  auto d1 = combo_ddx(c);
  auto d2 = combo_ddx(d1);
  auto d3 = combo_ddx(d2);
  auto d4 = combo_ddx(d3);
  s.u0 = combo_eval(c, x);
  s.u1 = combo_eval(d1, x);
  s.u2 = combo_eval(d2, x);
  s.u3 = combo_eval(d3, x);
  s.u4 = combo_eval(d4, x);
  return s;
}

// Expanded form of D applied at x (x != 0).
double apply_D(const ParamPair& p, double x, const DerivStack& s);

// S with lower index (mu, sign): sign=-1 gives (theta(theta+mu)-x^2)/x,
// sign=+1 gives (theta(theta+mu+2)+mu+1-x^2)/x.  Uses u0..u2.
double apply_S(const ParamPair& p, int sign, double x, const DerivStack& s);

// H = x d/dx + (mu+nu+2)/2.
double apply_H(const ParamPair& p, double x, double u, double du);

// Exponents of the Euler part at the regular singular point x = 0.
std::array<double, 4> indicial_exponents(const ParamPair& p);

// Eigenvalue of D on the j-th eigenfunction: 4 j (j + mu + 1).
double eigenvalue_D(const ParamPair& p, long long j);

// Natural magnitude against which a residual of D u - lambda u is judged.
double residual_scale_D(const ParamPair& p, long long j, double x, const DerivStack& s);

}  // namespace bessel4
