// The eigenfunction families Lambda_{i,j} of the fourth-order operator,
// represented exactly as prefactored Bessel combinations, together with the
// polynomial companion M_j, leading asymptotics, the connection matrix for
// continuation to the negative axis, and double-integral representations.
#pragma once

#include <bessel4/combo.hpp>
#include <bessel4/diffop.hpp>
#include <bessel4/params.hpp>

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace bessel4 {

// Families 1,2 exist for j >= 0; families 3,4 for j >= -mu (mu a positive odd
// integer there).  Below the threshold the function is identically zero.
bool lambda_admissible(int family, long long j, const ParamPair& p);
long long lambda_min_j(int family, const ParamPair& p);

struct LambdaCombo {
  Prefactor pf;
  BesselCombo<Rat> combo;
};

enum class LambdaRoute { Series, Recurrence };

// Exact symbolic form of Lambda_{i,j}.  The Series route expands the Bessel
// generating function; the Recurrence route (family 2 only) climbs the
// three-term H-recurrence.  Both give identical term lists.
// Sub-threshold j yields the zero combination.
LambdaCombo lambda_combo(int family, long long j, const ParamPair& p,
                         LambdaRoute route = LambdaRoute::Series);

double lambda_eval(int family, long long j, const ParamPair& p, double x);

// Derivative stack of Lambda_{i,j} at x via exact symbolic differentiation.
DerivStack lambda_stack(int family, long long j, const ParamPair& p, double x);

// Polynomial companion for odd nu >= 1:
//   Lambda_{2,j}(x) = 2^mu Gamma(j+(mu+1)/2)/Gamma(j+mu+1) x^{-nu} e^{-x} M_j(2x),
// deg M_j = j + (nu-1)/2, leading coefficient (-1)^j/j!.
struct MPoly {
  std::vector<Rat> coeff;  // coeff[k] multiplies x^k
  Rat at(const Rat& x) const;
  double eval(double x) const;
  long long degree() const { return static_cast<long long>(coeff.size()) - 1; }
};
MPoly m_polynomial(long long j, const ParamPair& p);

enum class Side { Zero, Infinity };

// Leading behaviour: value ~ coefficient * x^power * exp(exp_sign * x),
// with an extra factor -log(x/2) when log_flag is set.  At infinity the
// coefficient is NaN for families 3,4 (only the envelope is known).
struct AsympLead {
  double coefficient;
  double power;
  int exp_sign;
  bool log_flag;
};
AsympLead asymptotic_lead(int family, long long j, const ParamPair& p, Side side);

// Connection matrix C with Lambda(-x) = C Lambda(x) (row order i = 1..4),
// lower-triangular with entries built from a_alpha = e^{-i pi alpha} and
// b_alpha = (Gamma(1-alpha/2) Gamma(alpha/2) / 2)(e^{-i pi alpha} - 1).
// Throws for resonant (even integer) mu or nu.
Eigen::Matrix4cd monodromy_matrix(const ParamPair& p);

// Double-integral representation (families 1 and 2; requires mu, nu > -1).
double integral_rep_eval(int family, long long j, const ParamPair& p, double x);

}  // namespace bessel4
