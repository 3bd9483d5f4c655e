#ifndef ELM_ANALYSIS_HPP
#define ELM_ANALYSIS_HPP

#include "elm/elliptic.hpp"

namespace elm {

/// The power-mean order lambda. Any finite real value is admissible;
/// lambda = 0 selects the geometric mean.
struct MeanOrder {
  double lambda;
};

/// f1(r) = r'^2 K / E, decreasing from (0,1) onto (0,1).
double f1(const Modulus& m);

/// f2(r) = (E - r'^2 K) / r^2, increasing and convex from (0,1) onto (pi/4,1).
double f2(const Modulus& m);

/// f3(r) = r'^c K for c >= 1/2, decreasing from [0,1) onto (0,pi/2].
double f3(const Modulus& m, double c);

/// f4(r) = (K - E) / (r^2 K), increasing and convex from (0,1) onto (1/2,1).
double f4(const Modulus& m);

/// g(r) = K K' (E E' + r^2 K K' - K E') / (4 E' K - pi)^2, positive on (0,1)
/// with limit 0 at both endpoints. The middle factor is evaluated in the
/// Legendre-rewritten form E (E' + K') - r'^2 K K' - pi/2, which keeps its
/// digits near r = 1.
double g_func(const Modulus& m);
double g_func(const EllipticValues& v);

/// The same factor in its direct form E E' + r^2 K K' - K E'; kept only as a
/// cross-check against the rewritten production path.
double g_numerator_direct(const EllipticValues& v);

/// h(r) = (4 E' K - pi) / m(r) * (m(r)/r)^lambda; strictly increasing on
/// (0,1) iff lambda <= 0. The power is taken through exp(lambda * log(m/r));
/// throws OverflowError when that exponent leaves the binary64 range.
double h_func(const Modulus& m, MeanOrder order);

/// H(r) = (1 + 8 g(r)) / (1 + pi m(r) / (4 E' K - pi)) on (0,1), with the
/// defined endpoint values H(0) = 0 and H(1) = 1. This is the mean order at
/// which h'(r) changes sign; its maximum over (0,1] is the constant C.
/// Moduli inside (0,1) but beyond the interior guard are clamped to the guard.
double critical_order(const Modulus& m);
double critical_order(const EllipticValues& v);

/// h'(r)/h(r) = ((4 E' K - pi)/(pi r m(r)) + 1/r) * (H(r) - lambda).
/// The first factor is positive, so the sign is the sign of H(r) - lambda.
double h_log_derivative(const Modulus& m, MeanOrder order);

}  // namespace elm

#endif  // ELM_ANALYSIS_HPP
