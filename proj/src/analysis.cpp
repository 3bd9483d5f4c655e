#include "elm/analysis.hpp"

#include <cmath>
#include <numbers>

namespace elm {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest exponent exp() maps to a finite binary64.
constexpr double kMaxExp = 709.0;

}  // namespace

double f1(const Modulus& m) {
  detail::require_interior(m.r(), "f1");
  const double rc2 = m.r_comp() * m.r_comp();
  return rc2 * ellint_k(m) / ellint_e(m);
}

double f2(const Modulus& m) {
  detail::require_interior(m.r(), "f2");
  return ellint_e_minus_rc2_k(m) / (m.r() * m.r());
}

double f3(const Modulus& m, double c) {
  if (!(c >= 0.5) || !std::isfinite(c)) {
    throw ParamError("f3: exponent c must be >= 1/2");
  }
  if (m.r() >= 1.0) {
    throw DomainError("f3: modulus must lie in [0,1)");
  }
  return std::pow(m.r_comp(), c) * ellint_k(m);
}

double f4(const Modulus& m) {
  detail::require_interior(m.r(), "f4");
  return ellint_k_minus_e(m) / (m.r() * m.r() * ellint_k(m));
}

double g_numerator_direct(const EllipticValues& v) {
  const double r = v.modulus.r();
  return v.e * v.e_comp + r * r * v.k * v.k_comp - v.k * v.e_comp;
}

double g_func(const EllipticValues& v) {
  const double rc = v.modulus.r_comp();
  // E E' + r^2 K K' - K E' rewritten through the Legendre relation
  // E K' + E' K - K K' = pi/2.
  const double num =
      v.e * (v.e_comp + v.k_comp) - rc * rc * v.k * v.k_comp - kPi / 2.0;
  const double den = 4.0 * v.e_comp * v.k - kPi;
  return v.k * v.k_comp * num / (den * den);
}

double g_func(const Modulus& m) {
  detail::require_interior(m.r(), "g_func");
  return g_func(elliptic_values(m));
}

double h_func(const Modulus& m, MeanOrder order) {
  detail::require_interior(m.r(), "h_func");
  const EllipticValues v = elliptic_values(m);
  const double mr = m_func(v);
  const double lead = (4.0 * v.e_comp * v.k - kPi) / mr;
  if (order.lambda == 0.0) {
    return lead;
  }
  const double exponent = order.lambda * std::log(mr / m.r());
  if (exponent > kMaxExp) {
    throw OverflowError("h_func: (m/r)^lambda overflows");
  }
  return lead * std::exp(exponent);
}

double critical_order(const EllipticValues& v) {
  const double mr = m_func(v);
  const double den = 4.0 * v.e_comp * v.k - kPi;
  return (1.0 + 8.0 * g_func(v)) / (1.0 + kPi * mr / den);
}

double critical_order(const Modulus& m) {
  if (m.r() == 0.0) {
    return 0.0;
  }
  if (m.r() == 1.0) {
    return 1.0;
  }
  double r = m.r();
  if (r < detail::kInteriorGuard) {
    r = detail::kInteriorGuard;
  } else if (r > 1.0 - detail::kInteriorGuard) {
    r = 1.0 - detail::kInteriorGuard;
  }
  return critical_order(elliptic_values(Modulus::from_r(r)));
}

double h_log_derivative(const Modulus& m, MeanOrder order) {
  detail::require_interior(m.r(), "h_log_derivative");
  const EllipticValues v = elliptic_values(m);
  const double mr = m_func(v);
  const double den = 4.0 * v.e_comp * v.k - kPi;
  const double factor = den / (kPi * m.r() * mr) + 1.0 / m.r();
  return factor * (critical_order(v) - order.lambda);
}

}  // namespace elm
