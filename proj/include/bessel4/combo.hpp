// Exact algebra of finite Bessel-term combinations
//
//   sum_r  c_r * x^{m_r} * B~_{alpha0 + ell_r}(x)
//
// where B~ is the normalized I- or K-Bessel function (or the constant 1 for
// polynomial terms) and alpha0 is a shared rational base order.  The family
// is closed under theta = x d/dx, d/dx, and multiplication by powers of x,
// with exact rational coefficient arithmetic:
//
//   d/dx [x^m I~_b] = m x^{m-1} I~_b + (1/2) x^{m+1} I~_{b+1}
//   d/dx [x^m K~_b] = m x^{m-1} K~_b - (1/2) x^{m+1} K~_{b+1}
#pragma once

#include <bessel4/params.hpp>
#include <bessel4/rational.hpp>
#include <bessel4/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bessel4 {

enum class BKind : int { One = 0, I = 1, K = 2 };

template <class C>
struct BTerm {
  BKind kind;
  long long m;    // power of x
  long long ell;  // order offset: the Bessel order is base_order + ell (0 for One)
  C coeff;
};

template <class C>
struct BesselCombo {
  Rat base_order;  // alpha0
  std::vector<BTerm<C>> terms;
};

// Sort by (kind, ell, m), merge duplicates, drop zero coefficients.
template <class C>
void combo_canonicalize(BesselCombo<C>* a) {
  for (auto& t : a->terms)
    if (t.kind == BKind::One) t.ell = 0;
  std::sort(a->terms.begin(), a->terms.end(), [](const BTerm<C>& u, const BTerm<C>& v) {
    return std::tuple(static_cast<int>(u.kind), u.ell, u.m) <
           std::tuple(static_cast<int>(v.kind), v.ell, v.m);
  });
  std::vector<BTerm<C>> out;
  for (const auto& t : a->terms) {
    if (!out.empty() && out.back().kind == t.kind && out.back().ell == t.ell &&
        out.back().m == t.m) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const BTerm<C>& t) { return t.coeff == C(0); }),
            out.end());
  a->terms = std::move(out);
}

template <class C>
bool combo_equal(BesselCombo<C> a, BesselCombo<C> b) {
  if (a.base_order != b.base_order) return false;
  combo_canonicalize(&a);
  combo_canonicalize(&b);
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    const auto &u = a.terms[i], &v = b.terms[i];
    if (u.kind != v.kind || u.ell != v.ell || u.m != v.m || !(u.coeff == v.coeff)) return false;
  }
  return true;
}

template <class C>
bool combo_is_zero(BesselCombo<C> a) {
  combo_canonicalize(&a);
  return a.terms.empty();
}

// a*A + b*B (A and B must share the base order)
template <class C>
BesselCombo<C> combo_linear(const C& ca, const BesselCombo<C>& a, const C& cb,
                            const BesselCombo<C>& b) {
  if (!a.terms.empty() && !b.terms.empty() && a.base_order != b.base_order)
    throw std::invalid_argument("combo_linear: base order mismatch");
  BesselCombo<C> r;
  r.base_order = a.terms.empty() && !b.terms.empty() ? b.base_order : a.base_order;
  for (auto t : a.terms) {
    t.coeff *= ca;
    r.terms.push_back(t);
  }
  for (auto t : b.terms) {
    t.coeff *= cb;
    r.terms.push_back(t);
  }
  combo_canonicalize(&r);
  return r;
}

// theta = x d/dx, term by term:
//   theta [x^m B~_b] = m x^m B~_b + (sign) (1/2) x^{m+2} B~_{b+1},  sign: I +, K -,
// and for pure powers just m x^m.
template <class C>
BesselCombo<C> combo_theta(const BesselCombo<C>& a) {
  BesselCombo<C> r;
  r.base_order = a.base_order;
  for (const auto& t : a.terms) {
    if (t.m != 0) r.terms.push_back({t.kind, t.m, t.ell, t.coeff * C(t.m)});
    if (t.kind == BKind::I)
      r.terms.push_back({t.kind, t.m + 2, t.ell + 1, t.coeff / C(2)});
    else if (t.kind == BKind::K)
      r.terms.push_back({t.kind, t.m + 2, t.ell + 1, -t.coeff / C(2)});
  }
  combo_canonicalize(&r);
  return r;
}

template <class C>
BesselCombo<C> combo_ddx(const BesselCombo<C>& a) {
  BesselCombo<C> r;
  r.base_order = a.base_order;
  for (const auto& t : a.terms) {
    if (t.m != 0) r.terms.push_back({t.kind, t.m - 1, t.ell, t.coeff * C(t.m)});
    if (t.kind == BKind::I)
      r.terms.push_back({t.kind, t.m + 1, t.ell + 1, t.coeff / C(2)});
    else if (t.kind == BKind::K)
      r.terms.push_back({t.kind, t.m + 1, t.ell + 1, -t.coeff / C(2)});
  }
  combo_canonicalize(&r);
  return r;
}

// multiply by c * x^dm
template <class C>
BesselCombo<C> combo_scale_monomial(const BesselCombo<C>& a, long long dm, const C& c) {
  BesselCombo<C> r;
  r.base_order = a.base_order;
  for (auto t : a.terms) {
    t.m += dm;
    t.coeff *= c;
    r.terms.push_back(t);
  }
  combo_canonicalize(&r);
  return r;
}

template <class C>
BesselCombo<C> combo_mul_x2(const BesselCombo<C>& a) {
  return combo_scale_monomial(a, 2, C(1));
}

// Re-express with a new base order differing by an integer (offsets shift).
template <class C>
BesselCombo<C> combo_rebase(const BesselCombo<C>& a, const Rat& new_base) {
  Rat d = a.base_order - new_base;
  if (!is_integer(d)) throw std::invalid_argument("combo_rebase: non-integer shift");
  long long s = rat_to_ll(d);
  BesselCombo<C> r;
  r.base_order = new_base;
  for (auto t : a.terms) {
    if (t.kind != BKind::One) t.ell += s;
    r.terms.push_back(t);
  }
  combo_canonicalize(&r);
  return r;
}

// Rewrite every term with even positive excess m - 2*ell > 0 into the
// canonical ladder x^{2k} B~_{alpha0+k} using the exact order recurrences
//   I~_g = (g+1) I~_{g+1} + (x^2/4) I~_{g+2},
//   K~_g = (x^2/4) K~_{g+2} - (g+1) K~_{g+1}.
// Terms with zero, negative, or odd excess (and pure powers) pass through.
inline BesselCombo<Rat> combo_reduce_excess(BesselCombo<Rat> a) {
  for (;;) {
    bool rewrote = false;
    BesselCombo<Rat> next;
    next.base_order = a.base_order;
    for (const auto& t : a.terms) {
      const long long excess = t.m - 2 * t.ell;
      if (t.kind == BKind::One || excess <= 0 || excess % 2 != 0) {
        next.terms.push_back(t);
        continue;
      }
      rewrote = true;
      const Rat g1 = a.base_order + t.ell + 1;  // order + 1
      if (t.kind == BKind::I) {
        next.terms.push_back({BKind::I, t.m, t.ell + 1, t.coeff * g1});
        next.terms.push_back({BKind::I, t.m + 2, t.ell + 2, t.coeff / 4});
      } else {
        next.terms.push_back({BKind::K, t.m, t.ell + 1, -t.coeff * g1});
        next.terms.push_back({BKind::K, t.m + 2, t.ell + 2, t.coeff / 4});
      }
    }
    combo_canonicalize(&next);
    a = std::move(next);
    if (!rewrote) return a;
  }
}

// Rewrite every Bessel term with order offset ell >= 2 down to the offsets
// {0, 1} over Laurent monomials, via the exact recurrences
//   I~_{a+1} = (4/x^2)(I~_{a-1} - a I~_a),
//   K~_{a+1} = (4/x^2)(a K~_a + K~_{a-1}).
// Functions I~_b, I~_{b+1} (resp. K~) are independent over rational functions,
// so this form decides exact equality of combinations sharing a base order.
inline BesselCombo<Rat> combo_reduce_low(BesselCombo<Rat> a) {
  for (;;) {
    bool rewrote = false;
    BesselCombo<Rat> next;
    next.base_order = a.base_order;
    for (const auto& t : a.terms) {
      if (t.kind == BKind::One || t.ell <= 1) {
        next.terms.push_back(t);
        continue;
      }
      rewrote = true;
      const Rat av = a.base_order + (t.ell - 1);
      if (t.kind == BKind::I) {
        next.terms.push_back({BKind::I, t.m - 2, t.ell - 2, t.coeff * 4});
        next.terms.push_back({BKind::I, t.m - 2, t.ell - 1, -t.coeff * 4 * av});
      } else {
        next.terms.push_back({BKind::K, t.m - 2, t.ell - 2, t.coeff * 4});
        next.terms.push_back({BKind::K, t.m - 2, t.ell - 1, t.coeff * 4 * av});
      }
    }
    combo_canonicalize(&next);
    a = std::move(next);
    if (!rewrote) return a;
  }
}

inline BesselCombo<double> combo_to_double(const BesselCombo<Rat>& a) {
  BesselCombo<double> r;
  r.base_order = a.base_order;
  for (const auto& t : a.terms) r.terms.push_back({t.kind, t.m, t.ell, to_double(t.coeff)});
  return r;
}

namespace detail {
inline long double coeff_ld(const Rat& c) { return rat_to_ld(c); }
inline long double coeff_ld(double c) { return c; }
}  // namespace detail

// Numeric evaluation at x > 0 (long double accumulation).
template <class C>
double combo_eval(const BesselCombo<C>& a, double x) {
  long double s = 0.0L;
  for (const auto& t : a.terms) {
    long double b = 1.0L;
    if (t.kind != BKind::One) {
      double order = to_double(a.base_order + t.ell);
      b = (t.kind == BKind::I) ? bessel_i_tilde(order, x) : bessel_k_tilde(order, x);
    }
    s += detail::coeff_ld(t.coeff) * powl(static_cast<long double>(x), t.m) * b;
  }
  return static_cast<double>(s);
}

// Symbolic overall prefactor: q * sqrt(pi)^{s} / Gamma(arg).
struct Prefactor {
  Rat q = Rat(1);
  int sqrt_pi = 0;
  bool has_inv_gamma = false;
  Rat inv_gamma_arg = Rat(0);
  double value() const;
};

// Truncated power series in t whose coefficients are Bessel combinations:
// pf * sum_{j=valuation}^{N} coeff[j - valuation] t^j.
struct GenSeries {
  Prefactor pf;
  long long valuation = 0;
  std::vector<BesselCombo<Rat>> coeff;

  const BesselCombo<Rat>& at(long long j) const {
    static const BesselCombo<Rat> kZero{};
    if (j < valuation || j >= valuation + static_cast<long long>(coeff.size())) {
      if (j < valuation) return kZero;
      throw std::out_of_range("GenSeries: index beyond truncation order");
    }
    return coeff[j - valuation];
  }
};

// Expansion of the product generating function for family i in {1,2,3,4}
// through t^N.  Families 1,2 start at t^0; families 3,4 (which require an odd
// positive integer mu) start at t^{-mu}.
GenSeries build_generating_series(int family, const ParamPair& p, long long N);

// "kind:m:ell:num/den" terms joined with '+'
std::string serialize_combo(const BesselCombo<Rat>& a);

}  // namespace bessel4
