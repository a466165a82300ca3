// Bessel-combination algebra: exact structure of the generating-series
// coefficients, consistency of the symbolic operators with numerics, and the
// serialization format.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bessel4/combo.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <set>
#include <stdexcept>

using namespace bessel4;

namespace {

ParamPair pp(long long mn, long long md, long long nn, long long nd) {
  return ParamPair(rat_of(mn, md), rat_of(nn, nd));
}

// direct scalar evaluation of the family-2 product generating function
double g2_direct(double mu, double nu, double t, double x) {
  double a = (mu + nu + 2) / 2;
  return std::pow(1 - t, -a) * bessel_i_tilde(mu / 2, t * x / (1 - t)) *
         bessel_k_tilde(nu / 2, x / (1 - t));
}

}  // namespace

TEST_CASE("theta operator consistent with numeric differentiation") {
  auto g = build_generating_series(2, pp(2, 1, -1, 1), 6);
  for (long long j : {0L, 1L, 3L, 5L}) {
    const auto& c = g.at(j);
    auto tc = combo_theta(c);
    for (double x : {0.4, 1.1, 2.7}) {
      CAPTURE(j);
      CAPTURE(x);
      double h = 1e-6 * x;
      double fd = x * (combo_eval(c, x + h) - combo_eval(c, x - h)) / (2 * h);
      double sym = combo_eval(tc, x);
      CHECK(std::fabs(fd - sym) <= 1e-6 * std::max(1.0, std::fabs(sym)));
    }
  }
}

TEST_CASE("ddx operator and power shift") {
  BesselCombo<Rat> one_term{rat_of(-1, 2), {{BKind::K, 0, 0, Rat(1)}}};
  // d/dx K~_b = -(x/2) K~_{b+1}
  auto d = combo_ddx(one_term);
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].kind == BKind::K);
  CHECK(d.terms[0].m == 1);
  CHECK(d.terms[0].ell == 1);
  CHECK(d.terms[0].coeff == rat_of(-1, 2));
  // x^2 shift
  auto s = combo_mul_x2(d);
  CHECK(s.terms[0].m == 3);
  // One-kind terms differentiate as plain powers
  BesselCombo<Rat> poly{Rat(0), {{BKind::One, 3, 0, Rat(2)}}};
  auto dp = combo_ddx(poly);
  REQUIRE(dp.terms.size() == 1);
  CHECK(dp.terms[0].m == 2);
  CHECK(dp.terms[0].coeff == Rat(6));
  // numeric check of the derivative rule on a mixed combo
  auto g = build_generating_series(2, pp(5, 2, 1, 3), 5);
  const auto& c = g.at(4);
  auto dc = combo_ddx(c);
  for (double x : {0.6, 1.9}) {
    double h = 1e-6;
    double fd = (combo_eval(c, x + h) - combo_eval(c, x - h)) / (2 * h);
    CHECK(std::fabs(fd - combo_eval(dc, x)) <= 1e-6 * std::max(1.0, std::fabs(fd)));
  }
}

TEST_CASE("generating-series coefficients match t-expansion of the product") {
  const double mu = 2.0, nu = -1.0, x0 = 1.0;
  auto g = build_generating_series(2, pp(2, 1, -1, 1), 8);
  const double pf = g.pf.value();
  // degree-12 polynomial fit through 13 Chebyshev-spaced points in |t|<=0.08
  const int kN = 13;
  Eigen::MatrixXd V(kN, kN);
  Eigen::VectorXd y(kN);
  const double kPi = 3.14159265358979323846;
  for (int r = 0; r < kN; ++r) {
    double t = 0.08 * std::cos(kPi * (r + 0.5) / kN);
    double p = 1;
    for (int c = 0; c < kN; ++c) {
      V(r, c) = p;
      p *= t;
    }
    y(r) = g2_direct(mu, nu, t, x0);
  }
  Eigen::VectorXd coef = V.fullPivLu().solve(y);
  for (long long j = 0; j <= 5; ++j) {
    CAPTURE(j);
    double sym = pf * combo_eval(g.at(j), x0);
    CHECK(std::fabs(coef(j) - sym) <= 1e-6 * std::max(1.0, std::fabs(sym)));
  }
}

TEST_CASE("truncation order does not perturb lower coefficients") {
  for (int family : {1, 2}) {
    auto g8 = build_generating_series(family, pp(1, 2, 0, 1), 8);
    auto g13 = build_generating_series(family, pp(1, 2, 0, 1), 13);
    for (long long j = 0; j <= 8; ++j) CHECK(combo_equal(g8.at(j), g13.at(j)));
  }
  for (int family : {3, 4}) {
    auto g8 = build_generating_series(family, pp(3, 1, 1, 2), 8);
    auto g13 = build_generating_series(family, pp(3, 1, 1, 2), 13);
    for (long long j = -3; j <= 8; ++j) CHECK(combo_equal(g8.at(j), g13.at(j)));
  }
}

TEST_CASE("kind purity and valuation per family") {
  struct {
    int family;
    BKind expect;
  } rows[] = {{1, BKind::I}, {2, BKind::K}, {3, BKind::I}, {4, BKind::K}};
  for (const auto& r : rows) {
    ParamPair p = (r.family <= 2) ? pp(5, 2, 1, 3) : pp(3, 1, 1, 3);
    auto g = build_generating_series(r.family, p, 6);
    long long mu = 3;
    for (long long j = g.valuation; j <= 6; ++j) {
      for (const auto& t : g.at(j).terms) {
        CHECK((t.kind == r.expect || t.kind == BKind::One));
        if (r.family >= 3) CHECK(t.m >= -mu);
      }
    }
    if (r.family <= 2)
      CHECK(g.valuation == 0);
    else
      CHECK(g.valuation == -3);
  }
}

TEST_CASE("leading coefficients of the second family in closed form") {
  // j=0: K~_{nu/2}; j=1: ((mu+nu+2)/2) K~_{nu/2} - (1/2) x^2 K~_{nu/2+1}
  for (auto [mn, nn] : {std::pair{2LL, -1LL}, std::pair{3LL, 2LL}}) {
    auto g = build_generating_series(2, pp(mn, 1, nn, 1), 3);
    BesselCombo<Rat> want0{rat_of(nn, 2), {{BKind::K, 0, 0, Rat(1)}}};
    CHECK(combo_equal(g.at(0), want0));
    BesselCombo<Rat> want1{rat_of(nn, 2),
                           {{BKind::K, 0, 0, rat_of(mn + nn + 2, 2)}, {BKind::K, 2, 1, rat_of(-1, 2)}}};
    CHECK(combo_equal(g.at(1), want1));
  }
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_AS(build_generating_series(2, pp(-2, 1, 0, 1), 4), std::invalid_argument);
  CHECK_THROWS_AS(build_generating_series(1, pp(-1, 1, 0, 1), 4), std::invalid_argument);
  CHECK_THROWS_AS(build_generating_series(3, pp(2, 1, 0, 1), 4), std::invalid_argument);  // even mu
  CHECK_THROWS_AS(build_generating_series(4, pp(5, 2, 0, 1), 4), std::invalid_argument);  // non-integer
  CHECK_THROWS_AS(build_generating_series(0, pp(2, 1, 0, 1), 4), std::invalid_argument);
  CHECK_NOTHROW(build_generating_series(2, pp(-1, 2, -1, 1), 4));  // mu = -1/2 is fine
}

TEST_CASE("serialization format") {
  auto g = build_generating_series(2, pp(2, 1, -1, 1), 2);
  CHECK(serialize_combo(g.at(0)) == "K:0:0:1");
  CHECK(serialize_combo(g.at(1)) == "K:0:0:3/2+K:2:1:-1/2");
  BesselCombo<Rat> z{Rat(0), {}};
  CHECK(serialize_combo(z) == "0");
}

TEST_CASE("canonicalization merges, orders, and strips zeros") {
  BesselCombo<Rat> c{Rat(1),
                     {{BKind::K, 2, 1, Rat(1)},
                      {BKind::I, 0, 0, Rat(2)},
                      {BKind::K, 2, 1, Rat(-1)},
                      {BKind::One, 4, 7, Rat(3)},
                      {BKind::One, 1, 0, Rat(5)}}};
  combo_canonicalize(&c);
  REQUIRE(c.terms.size() == 3);
  CHECK(c.terms[0].kind == BKind::One);
  CHECK(c.terms[0].m == 1);
  CHECK(c.terms[1].kind == BKind::One);
  CHECK(c.terms[1].m == 4);
  CHECK(c.terms[1].ell == 0);  // One-kind offset normalized away
  CHECK(c.terms[2].kind == BKind::I);
  // duplicate (K,2,1) pair summed to zero and removed
  for (const auto& t : c.terms) CHECK(t.coeff != Rat(0));
}

TEST_CASE("rebase shifts offsets by integer base difference") {
  BesselCombo<Rat> c{rat_of(1, 2), {{BKind::K, 0, 0, Rat(1)}, {BKind::K, 2, 1, Rat(2)}}};
  auto r = combo_rebase(c, rat_of(-1, 2));
  CHECK(r.base_order == rat_of(-1, 2));
  CHECK(r.terms[0].ell == 1);
  CHECK(r.terms[1].ell == 2);
  for (double x : {0.7, 1.8}) CHECK(combo_eval(r, x) == doctest::Approx(combo_eval(c, x)).epsilon(1e-14));
  CHECK_THROWS_AS(combo_rebase(c, Rat(0)), std::invalid_argument);
}
