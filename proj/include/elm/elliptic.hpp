#ifndef ELM_ELLIPTIC_HPP
#define ELM_ELLIPTIC_HPP

#include "elm/errors.hpp"

namespace elm {

/// A modulus r in [0,1] together with its complement r' = sqrt(1-r^2).
///
/// The complement is always formed as sqrt((1-r)(1+r)) so that no accuracy
/// is lost near r = 1.
class Modulus {
 public:
  static Modulus from_r(double r);

  double r() const { return r_; }
  double r_comp() const { return r_comp_; }

  /// The complementary modulus as a Modulus of its own.
  Modulus complement() const;

 private:
  Modulus(double r, double r_comp) : r_(r), r_comp_(r_comp) {}
  double r_;
  double r_comp_;
};

/// The bundle (K, E, K', E') at one modulus, computed once and reused.
struct EllipticValues {
  Modulus modulus;
  double k;       ///< K(r)
  double e;       ///< E(r)
  double k_comp;  ///< K'(r) = K(r')
  double e_comp;  ///< E'(r) = E(r')
};

/// Limit of the arithmetic-geometric mean iteration started at (a, b).
/// Stops when |a_n - b_n| <= 1e-16 * a_n; throws NoConvergence after 64
/// iterations and DomainError if a or b is not strictly positive and finite.
double agm(double a, double b);

/// Complete elliptic integral of the first kind, K(r) = pi / (2 agm(1, r')).
/// Requires r in [0,1); K diverges at r = 1.
double ellint_k(const Modulus& m);

/// Complete elliptic integral of the second kind, evaluated along the same
/// AGM iteration as K by accumulating sum 2^(n-1) c_n^2. Requires r in [0,1].
double ellint_e(const Modulus& m);

/// E(r) - r'^2 K(r), formed without the catastrophic cancellation the naive
/// difference suffers near r = 0. Requires r in [0,1).
double ellint_e_minus_rc2_k(const Modulus& m);

/// K(r) - E(r), cancellation-safe near r = 0. Requires r in [0,1).
double ellint_k_minus_e(const Modulus& m);

/// All four integrals at once; requires r in the guarded interior of (0,1)
/// since one of K, K' diverges at the endpoints.
EllipticValues elliptic_values(const Modulus& m);

/// The modular function m(r) = (2/pi) r'^2 K(r) K'(r), strictly decreasing
/// from (0,1) onto (0,inf).
double m_func(const Modulus& m);
double m_func(const EllipticValues& v);

/// dK/dr = (E - r'^2 K) / (r r'^2), positive on (0,1).
double dk_dr(const Modulus& m);

/// dE/dr = (E - K) / r, negative on (0,1).
double de_dr(const Modulus& m);

/// d m(r)/dr = (pi - 4 E' K) / (pi r), negative on (0,1).
double dm_dr(const Modulus& m);
double dm_dr(const EllipticValues& v);

namespace detail {

// Interior guard: operations defined on the open interval reject moduli
// outside [kInteriorGuard, 1 - kInteriorGuard]. K' grows only
// logarithmically as r -> 0, so nothing measurable lives beyond the guard.
inline constexpr double kInteriorGuard = 1e-12;

void require_interior(double r, const char* op);

}  // namespace detail

}  // namespace elm

#endif  // ELM_ELLIPTIC_HPP
