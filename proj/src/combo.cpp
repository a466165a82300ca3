#include <bessel4/combo.hpp>

#include <cmath>

namespace bessel4 {

double Prefactor::value() const {
  double v = to_double(q);
  if (sqrt_pi) v *= std::sqrt(3.14159265358979323846);
  if (has_inv_gamma) v *= rgamma_fn(to_double(inv_gamma_arg));
  return v;
}

std::string serialize_combo(const BesselCombo<Rat>& a) {
  BesselCombo<Rat> c = a;
  combo_canonicalize(&c);
  static const char* kNames[] = {"One", "I", "K"};
  std::string out;
  for (const auto& t : c.terms) {
    if (!out.empty()) out += '+';
    out += kNames[static_cast<int>(t.kind)];
    out += ':';
    out += std::to_string(t.m);
    out += ':';
    out += std::to_string(t.ell);
    out += ':';
    out += rat_to_string(t.coeff);
  }
  return out.empty() ? "0" : out;
}

namespace {

void append_scaled(BesselCombo<Rat>* dst, const BesselCombo<Rat>& src, long long dm,
                   const Rat& w) {
  for (auto t : src.terms) {
    t.m += dm;
    t.coeff *= w;
    dst->terms.push_back(std::move(t));
  }
}

}  // namespace

GenSeries build_generating_series(int family, const ParamPair& p, long long N) {
  if (family < 1 || family > 4) throw std::invalid_argument("family must be 1..4");
  if (N < 0) throw std::invalid_argument("truncation order must be nonnegative");
  if (!p.mu_not_neg_int)
    throw std::invalid_argument("degenerate parameter: mu is a negative integer");
  if (family >= 3 && !p.ic_oddmu)
    throw std::invalid_argument("families 3,4 need an odd positive integer mu");

  const Rat mu = p.mu, nu = p.nu;
  const Rat base = nu / 2;
  const Rat a = (mu + nu + 2) / 2;  // binomial prefactor exponent
  const BKind outer = (family == 1 || family == 3) ? BKind::I : BKind::K;

  GenSeries g;
  g.valuation = (family <= 2) ? 0 : -rat_to_ll(mu);
  const long long count = N - g.valuation + 1;
  g.coeff.assign(count, BesselCombo<Rat>{base, {}});
  if (family <= 2) {
    g.pf.has_inv_gamma = true;
    g.pf.inv_gamma_arg = (mu + 2) / 2;
  } else {
    g.pf.sqrt_pi = 1;
  }

  // derivatives of the outer Bessel factor: D[k] = (d/dx)^k B~_{nu/2}(x)
  const long long depth = N - g.valuation;
  std::vector<BesselCombo<Rat>> D(depth + 1);
  D[0] = BesselCombo<Rat>{base, {{outer, 0, 0, Rat(1)}}};
  for (long long k = 1; k <= depth; ++k) D[k] = combo_ddx(D[k - 1]);

  // The outer factor B~(x/(1-t)) = B~(x + x u), u = t/(1-t), contributes
  // (x^k/k!) D[k] u^k; u^k merges into the (1-t) binomials handled below.
  if (family <= 2) {
    // inner factor I~_{mu/2}(t x/(1-t)) with 1/Gamma((mu+2)/2) factored out:
    //   sum_n t^{2n} x^{2n} (1-t)^{-2n} / (4^n n! ((mu+2)/2)_n)
    for (long long n = 0; 2 * n <= N; ++n) {
      Rat cn = Rat(1) / (rat_pow(Rat(4), n) * rat_factorial(n) * rat_pochhammer(a - nu / 2, n));
      for (long long k = 0; 2 * n + k <= N; ++k) {
        Rat ck = cn / rat_factorial(k);
        Rat b = a + 2 * n + k;  // total (1-t) exponent
        Rat poch(1);            // (b)_m / m!
        for (long long m = 0; 2 * n + k + m <= N; ++m) {
          long long j = 2 * n + k + m;
          append_scaled(&g.coeff[j], D[k], 2 * n + k, ck * poch);
          poch *= (b + m) / (m + 1);
        }
      }
    }
  } else {
    // inner factor K~_{mu/2}(t x/(1-t)) via its elementary closed form; each
    // closed-form monomial pairs with the Laguerre generating function
    //   (1-t)^{-beta-1} e^{-t x/(1-t)} = sum_n L_n^beta(x) t^n.
    const long long muL = rat_to_ll(mu);
    const long long h = (muL - 1) / 2;
    for (long long ip = 0; ip <= h; ++ip) {
      Rat ci = rat_factorial(2 * h - ip) /
               (rat_factorial(h - ip) * rat_factorial(ip)) * rat_pow(Rat(2), ip);
      for (long long k = 0; -muL + ip + k <= N; ++k) {
        Rat ck = ci / rat_factorial(k);
        Rat beta = (nu - mu) / 2 + ip + k;
        for (long long n = 0; -muL + ip + k + n <= N; ++n) {
          long long j = -muL + ip + k + n;
          auto lc = laguerre_coeffs_rat(n, beta);
          for (long long pw = 0; pw <= n; ++pw)
            append_scaled(&g.coeff[j - g.valuation], D[k], -muL + ip + k + pw, ck * lc[pw]);
        }
      }
    }
  }

  for (auto& c : g.coeff) combo_canonicalize(&c);
  return g;
}

}  // namespace bessel4
