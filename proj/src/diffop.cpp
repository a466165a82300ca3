#include <bessel4/diffop.hpp>

#include <cmath>
#include <stdexcept>

namespace bessel4 {

double apply_D(const ParamPair& p, double x, const DerivStack& s) {
  if (x == 0.0) throw std::invalid_argument("apply_D: x must be nonzero");
  const double m = p.mu_d, n = p.nu_d;
  const double x2 = x * x;
  const double c3 = 2.0 * (m + n + 3.0);
  const double c2 = m * m + 3.0 * m * n + n * n + 6.0 * (m + n) + 7.0 - 2.0 * x2;
  const double c1 = m * n * (m + n) + m * m + 3.0 * m * n + n * n + 2.0 * (m + n) + 1.0 -
                    2.0 * (m + n + 3.0) * x2;
  const double c0 = x2 - (m + 2.0) * (m + n + 2.0);
  return x2 * s.u4 + c3 * x * s.u3 + c2 * s.u2 + c1 * (s.u1 / x) + c0 * s.u0;
}

double apply_S(const ParamPair& p, int sign, double x, const DerivStack& s) {
  if (x == 0.0) throw std::invalid_argument("apply_S: x must be nonzero");
  const double m = p.mu_d;
  if (sign == -1) return x * s.u2 + (m + 1.0) * s.u1 - x * s.u0;
  if (sign == +1) return x * s.u2 + (m + 3.0) * s.u1 + (m + 1.0) * (s.u0 / x) - x * s.u0;
  throw std::invalid_argument("apply_S: sign must be +1 or -1");
}

double apply_H(const ParamPair& p, double x, double u, double du) {
  return x * du + 0.5 * (p.mu_d + p.nu_d + 2.0) * u;
}

std::array<double, 4> indicial_exponents(const ParamPair& p) {
  const double m = p.mu_d, n = p.nu_d;
  return {0.0, -n, -m, -m - n};
}

double eigenvalue_D(const ParamPair& p, long long j) {
  return 4.0 * static_cast<double>(j) * (static_cast<double>(j) + p.mu_d + 1.0);
}

double residual_scale_D(const ParamPair& p, long long j, double x, const DerivStack& s) {
  const double x2 = x * x;
  double mag = std::fabs(s.u0);
  mag = std::fmax(mag, std::fabs(s.u1));
  mag = std::fmax(mag, std::fabs(s.u2));
  mag = std::fmax(mag, std::fabs(s.u3));
  mag = std::fmax(mag, std::fabs(s.u4));
  return std::fmax(x2 * mag, std::fabs(eigenvalue_D(p, j) * s.u0));
}

}  // namespace bessel4
