#pragma once
// The universal parameter pair (mu, nu) and its classification.

#include <bessel4/rational.hpp>

namespace bessel4 {

enum class XiBranch { nu_minus1_halfint_mu, nu0_int_mu, both_nonneg_even_sum, none };

struct XiClass {
  bool membership = false;
  XiBranch branch = XiBranch::none;
};

// Membership in the admissible parameter set:
//   {(mu,-1): 2mu a nonnegative integer}
//   U {(mu,0): mu a nonnegative integer}
//   U {(mu,nu): mu,nu nonnegative integers, mu+nu even}
// with mu >= nu enforced in addition (every realizable pair satisfies it; the
// enforcement is documented in the README's design notes).
inline XiClass xi_contains(const Rat& mu, const Rat& nu) {
  XiClass c;
  if (mu < nu) return c;
  if (nu == -1 && is_nonneg_integer(mu * 2)) {
    c.membership = true;
    c.branch = XiBranch::nu_minus1_halfint_mu;
  } else if (nu == 0 && is_nonneg_integer(mu)) {
    c.membership = true;
    c.branch = XiBranch::nu0_int_mu;
  } else if (is_nonneg_integer(mu) && is_nonneg_integer(nu) && is_integer((mu + nu) / 2)) {
    c.membership = true;
    c.branch = XiBranch::both_nonneg_even_sum;
  }
  return c;
}

struct ParamPair {
  Rat mu, nu;
  double mu_d = 0, nu_d = 0;
  bool mu_not_neg_int = true;   // mu avoids -1, -2, -3, ...
  bool ic_oddmu = false;        // mu an odd integer >= 1 (families 3 and 4)
  bool xi_member = false;

  ParamPair() : ParamPair(Rat(0), Rat(0)) {}
  ParamPair(Rat m, Rat n) : mu(std::move(m)), nu(std::move(n)) {
    mu_d = to_double(mu);
    nu_d = to_double(nu);
    mu_not_neg_int = !(is_integer(mu) && mu <= -1);
    ic_oddmu = is_integer(mu) && mu >= 1 && rat_to_ll(mu) % 2 == 1;
    xi_member = xi_contains(mu, nu).membership;
  }
  static ParamPair of(long long mu_num, long long mu_den, long long nu_num, long long nu_den) {
    return ParamPair(rat_of(mu_num, mu_den), rat_of(nu_num, nu_den));
  }
  // Exact conversion (doubles are dyadic rationals).
  static ParamPair of_doubles(double mu, double nu) {
    return ParamPair(rat_from_double(mu), rat_from_double(nu));
  }
};

}  // namespace bessel4
