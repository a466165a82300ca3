#include <bessel4/lambda.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace bessel4 {

namespace {

void validate_family_params(int family, const ParamPair& p) {
  if (family < 1 || family > 4) throw std::invalid_argument("family must be 1..4");
  if (!p.mu_not_neg_int)
    throw std::invalid_argument("mu must avoid the negative integers");
  if (family >= 3 && !p.ic_oddmu)
    throw std::invalid_argument("families 3 and 4 require an odd positive integer mu");
}

Prefactor family_prefactor(int family, const ParamPair& p) {
  Prefactor pf;
  if (family <= 2) {
    pf.has_inv_gamma = true;
    pf.inv_gamma_arg = (p.mu + 2) / 2;
  } else {
    pf.sqrt_pi = 1;
  }
  return pf;
}

const GenSeries& cached_series(int family, const ParamPair& p, long long j) {
  static std::map<std::tuple<int, Rat, Rat>, GenSeries> cache;
  const auto key = std::make_tuple(family, p.mu, p.nu);
  auto it = cache.find(key);
  const long long need = j < 8 ? 8 : j;
  if (it == cache.end() ||
      it->second.valuation + static_cast<long long>(it->second.coeff.size()) <= need) {
    it = cache.insert_or_assign(key, build_generating_series(family, p, need + 2)).first;
  }
  return it->second;
}

BesselCombo<Rat> zero_combo(const ParamPair& p) {
  BesselCombo<Rat> c;
  c.base_order = p.nu / 2;
  return c;
}

// Forward climb of the three-term recurrence
//   (2j+mu+1) H Lam_j = (j+1)(j+mu+1) Lam_{j+1} - (j+(mu+nu)/2)(j+(mu-nu)/2) Lam_{j-1}
// for family 2, starting from Lam_0 = K~_{nu/2}.
BesselCombo<Rat> recurrence_combo(long long j, const ParamPair& p) {
  const Rat a = (p.mu + p.nu + 2) / 2;
  BesselCombo<Rat> prev = zero_combo(p);
  BesselCombo<Rat> cur = zero_combo(p);
  cur.terms.push_back({BKind::K, 0, 0, Rat(1)});
  for (long long m = 0; m < j; ++m) {
    auto h = combo_linear(Rat(1), combo_scale_monomial(combo_ddx(cur), 1, Rat(1)), a, cur);
    auto rhs = combo_linear(Rat(2 * m) + p.mu + 1, h,
                            (Rat(m) + (p.mu + p.nu) / 2) * (Rat(m) + (p.mu - p.nu) / 2), prev);
    const Rat den = Rat(m + 1) * (Rat(m) + p.mu + 1);
    prev = cur;
    cur = combo_linear(Rat(1) / den, rhs, Rat(0), rhs);
  }
  return cur;
}

}  // namespace

long long lambda_min_j(int family, const ParamPair& p) {
  validate_family_params(family, p);
  return family <= 2 ? 0 : -rat_to_ll(p.mu);
}

bool lambda_admissible(int family, long long j, const ParamPair& p) {
  if (family < 1 || family > 4) return false;
  if (!p.mu_not_neg_int) return false;
  if (family >= 3 && !p.ic_oddmu) return false;
  return j >= lambda_min_j(family, p);
}

LambdaCombo lambda_combo(int family, long long j, const ParamPair& p, LambdaRoute route) {
  validate_family_params(family, p);
  if (j < lambda_min_j(family, p)) return {family_prefactor(family, p), zero_combo(p)};

  if (route == LambdaRoute::Recurrence) {
    if (family != 2)
      throw std::invalid_argument("the recurrence route is available for family 2 only");
    return {family_prefactor(family, p), recurrence_combo(j, p)};
  }

  static std::map<std::tuple<int, long long, Rat, Rat>, LambdaCombo> cache;
  const auto key = std::make_tuple(family, j, p.mu, p.nu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const GenSeries& g = cached_series(family, p, j);
    LambdaCombo lc{g.pf, g.at(j)};
    // Families 1 and 2 live in the span of x^{2k} B~_{nu/2+k}; reduce to it.
    if (family <= 2) lc.combo = combo_reduce_excess(lc.combo);
    it = cache.insert_or_assign(key, std::move(lc)).first;
  }
  return it->second;
}

double lambda_eval(int family, long long j, const ParamPair& p, double x) {
  if (!(x > 0)) throw std::invalid_argument("lambda_eval: x must be positive");
  auto lc = lambda_combo(family, j, p);
  return lc.pf.value() * combo_eval(lc.combo, x);
}

DerivStack lambda_stack(int family, long long j, const ParamPair& p, double x) {
  if (!(x > 0)) throw std::invalid_argument("lambda_stack: x must be positive");
  auto lc = lambda_combo(family, j, p);
  DerivStack s = combo_stack(lc.combo, x);
  const double c = lc.pf.value();
  s.u0 *= c;
  s.u1 *= c;
  s.u2 *= c;
  s.u3 *= c;
  s.u4 *= c;
  return s;
}

Rat MPoly::at(const Rat& x) const {
  Rat acc(0);
  for (size_t k = coeff.size(); k-- > 0;) acc = acc * x + coeff[k];
  return acc;
}

double MPoly::eval(double x) const {
  long double acc = 0.0L;
  for (size_t k = coeff.size(); k-- > 0;) acc = acc * x + rat_to_ld(coeff[k]);
  return static_cast<double>(acc);
}

MPoly m_polynomial(long long j, const ParamPair& p) {
  if (!is_integer(p.nu) || p.nu < 1 || rat_to_ll(p.nu) % 2 == 0)
    throw std::invalid_argument("m_polynomial requires an odd integer nu >= 1");
  if (!p.mu_not_neg_int)
    throw std::invalid_argument("m_polynomial requires mu avoiding the negative integers");
  if (j < 0) throw std::invalid_argument("m_polynomial requires j >= 0");
  const long long nu = rat_to_ll(p.nu);
  const long long h = (nu - 1) / 2;
  MPoly out;
  out.coeff.assign(static_cast<size_t>(j + h + 1), Rat(0));
  const long long kmax = j < h ? j : h;
  for (long long k = 0; k <= kmax; ++k) {
    Rat ck = rat_pochhammer(Rat(j - k) + p.mu + 1, k) /
             (rat_pochhammer(Rat(j - k) + (p.mu + 1) / 2, k) * rat_factorial(k));
    if (k % 2 == 1) ck = -ck;
    const auto lag = laguerre_coeffs_rat(j - k, p.mu);
    for (long long i = 0; i + k <= h; ++i) {
      const Rat w = ck * rat_factorial(nu - i - 1) /
                    (rat_factorial(h - i - k) * rat_factorial(i));
      for (size_t q = 0; q < lag.size(); ++q)
        out.coeff[q + static_cast<size_t>(i)] += w * lag[q];
    }
  }
  return out;
}

namespace {

double pow2(double e) { return std::pow(2.0, e); }

// Rational top coefficient of the canonical ladder: the (2j, j) term.
Rat ladder_top(const BesselCombo<Rat>& c, long long j) {
  for (const auto& t : c.terms)
    if (t.kind != BKind::One && t.m == 2 * j && t.ell == j) return t.coeff;
  return Rat(0);
}

}  // namespace

AsympLead asymptotic_lead(int family, long long j, const ParamPair& p, Side side) {
  validate_family_params(family, p);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (j < lambda_min_j(family, p)) return {0.0, 0.0, 0, false};
  const double mu = p.mu_d, nu = p.nu_d;

  if (side == Side::Infinity) {
    AsympLead r{nan, static_cast<double>(j) - (nu + 1.0) / 2.0, family % 2 == 1 ? +1 : -1,
                false};
    if (family <= 2) {
      auto lc = lambda_combo(family, j, p);
      const long double top = rat_to_ld(ladder_top(lc.combo, j));
      const long double envelope = family == 1
                                       ? 0.5L / sqrtl(static_cast<long double>(M_PI))
                                       : sqrtl(static_cast<long double>(M_PI)) / 2.0L;
      r.coefficient = static_cast<double>(
          lc.pf.value() * top * envelope *
          powl(2.0L, static_cast<long double>(nu) / 2 + j + 0.5L));
    }
    return r;
  }

  // side == Side::Zero
  switch (family) {
    case 1: {
      const double c = rat_to_ld(rat_pochhammer((p.mu + p.nu + 2) / 2, j) / rat_factorial(j)) *
                       rgamma_fn((mu + 2) / 2) * rgamma_fn((nu + 2) / 2);
      return {c, 0.0, 0, false};
    }
    case 2: {
      const Rat abs_nu = p.nu < 0 ? -p.nu : p.nu;
      const double base =
          rat_to_ld(rat_pochhammer((p.mu - abs_nu + 2) / 2, j) / rat_factorial(j)) *
          rgamma_fn((mu + 2) / 2);
      if (p.nu > 0) return {base * pow2(nu - 1) * gamma_fn(nu / 2), -nu, 0, false};
      if (p.nu == 0) return {base, 0.0, 0, true};
      return {base * 0.5 * gamma_fn(-nu / 2), 0.0, 0, false};
    }
    case 3: {
      const long long jm = j + rat_to_ll(p.mu);
      const double c = pow2(mu - 1) * gamma_fn(mu / 2) *
                       rat_to_ld(rat_pochhammer((-p.mu + p.nu + 2) / 2, jm) / rat_factorial(jm)) *
                       rgamma_fn((nu + 2) / 2);
      return {c, -mu, 0, false};
    }
    default: {  // family 4
      const Rat abs_nu = p.nu < 0 ? -p.nu : p.nu;
      const long long jm = j + rat_to_ll(p.mu);
      const double base =
          gamma_fn(mu / 2) *
          rat_to_ld(rat_pochhammer((-p.mu - abs_nu + 2) / 2, jm) / rat_factorial(jm));
      if (p.nu > 0) return {base * pow2(mu + nu - 2) * gamma_fn(nu / 2), -mu - nu, 0, false};
      if (p.nu == 0) return {base * pow2(mu - 1), -mu, 0, true};
      return {base * pow2(mu - 2) * gamma_fn(-nu / 2), -mu, 0, false};
    }
  }
}

Eigen::Matrix4cd monodromy_matrix(const ParamPair& p) {
  using cd = std::complex<double>;
  // a_alpha = e^{-i pi alpha} and b_alpha = Gamma(1-alpha/2)Gamma(alpha/2)/2 (a_alpha - 1);
  // odd integers take the exactly-real shortcut a = -1, b = (-1)^{m+1} pi for
  // alpha = 2m+1, and even integers are resonant (no power continuation).
  auto entry = [](const Rat& alpha_rat, double alpha) -> std::pair<cd, cd> {
    if (is_integer(alpha_rat)) {
      const long long n = rat_to_ll(alpha_rat);
      if (n % 2 == 0)
        throw std::domain_error("connection matrix is resonant: even integer parameter");
      const long long m = (n - 1) / 2;
      const bool m_odd = ((m % 2) + 2) % 2 == 1;
      return {cd(-1.0, 0.0), cd(m_odd ? M_PI : -M_PI, 0.0)};
    }
    const cd a = std::exp(cd(0.0, -M_PI * alpha));
    const cd b = 0.5 * gamma_fn(1.0 - alpha / 2.0) * gamma_fn(alpha / 2.0) * (a - 1.0);
    return {a, b};
  };
  auto [an, bn] = entry(p.nu, p.nu_d);
  auto [am, bm] = entry(p.mu, p.mu_d);
  Eigen::Matrix4cd c;
  c.setZero();
  c(0, 0) = 1.0;
  c(1, 0) = bn;
  c(1, 1) = an;
  c(2, 0) = bm;
  c(2, 2) = am;
  c(3, 0) = bm * bn;
  c(3, 1) = an * bm;
  c(3, 2) = am * bn;
  c(3, 3) = am * an;
  return c;
}

namespace {

struct TsNode {
  double u;  // abscissa in (0,1)
  double w;  // weight
};

const std::vector<TsNode>& ts_nodes() {
  static const std::vector<TsNode> nodes = [] {
    std::vector<TsNode> v;
    const double h = 1.0 / 16.0;
    for (int i = -62; i <= 62; ++i) {
      const double s = h * i;
      const double q = 0.5 * M_PI * std::sinh(s);
      const double u = 0.5 * (1.0 + std::tanh(q));
      const double w = h * 0.25 * M_PI * std::cosh(s) / (std::cosh(q) * std::cosh(q));
      if (u > 0.0 && u < 1.0 && w > 1e-300) v.push_back({u, w});
    }
    return v;
  }();
  return nodes;
}

}  // namespace

double integral_rep_eval(int family, long long j, const ParamPair& p, double x) {
  if (family != 1 && family != 2)
    throw std::invalid_argument("integral representation covers families 1 and 2");
  if (j < 0) throw std::invalid_argument("integral representation requires j >= 0");
  if (!(p.mu_d > -1.0) || !(p.nu_d > -1.0))
    throw std::invalid_argument("integral representation requires mu, nu > -1");
  if (!(x > 0.0) || x >= 700.0)
    throw std::invalid_argument("integral representation requires 0 < x < 700");
  const double mu = p.mu_d, nu = p.nu_d;
  const double lag_order = 0.5 * (mu + nu);
  const auto& nodes = ts_nodes();
  // Outer variable theta in (0, pi) for both families.
  // Family 1: phi in (0, pi); family 2: phi in (0, Phi) with cosh(Phi) = 709/x
  // so that the e^{-x cosh phi} tail is below underflow at the cut.
  const double phi_len = family == 1 ? M_PI : std::acosh(709.0 / x);
  long double acc = 0.0L;
  for (const auto& a : nodes) {
    const double theta = M_PI * a.u;
    const double sin_mu = std::pow(std::sin(theta), mu);
    const double ct = std::cos(theta);
    long double inner = 0.0L;
    for (const auto& b : nodes) {
      const double phi = phi_len * b.u;
      double weight_phi, cphi;
      if (family == 1) {
        cphi = std::cos(phi);
        weight_phi = std::exp(-x * cphi) * std::pow(std::sin(phi), nu);
      } else {
        cphi = std::cosh(phi);
        const double e = -x * cphi;
        weight_phi = e < -745.0 ? 0.0 : std::exp(e) * std::pow(std::sinh(phi), nu);
      }
      if (weight_phi == 0.0) continue;
      inner += b.w * weight_phi * laguerre(j, lag_order, x * (ct + cphi));
    }
    acc += a.w * sin_mu * inner;
  }
  acc *= static_cast<long double>(M_PI) * phi_len;
  double c = rgamma_fn((mu + 1.0) / 2.0) * rgamma_fn((nu + 1.0) / 2.0);
  if (family == 1) c /= M_PI;
  return static_cast<double>(acc * c);
}

}  // namespace bessel4
