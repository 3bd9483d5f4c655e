#include "elm/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace elm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAgmRelTol = 1e-16;
constexpr int kAgmMaxIter = 64;

// One AGM pass on (1, r') that also accumulates the tail
// sum_{n>=1} 2^(n-1) c_n^2 of the second-kind series. The n = 0 term is
// r^2/2 and is kept separate so callers can combine it without cancellation.
// c_1 is seeded as r^2 / (2 (1 + r')), which equals (1 - r')/2 exactly but
// avoids the subtraction; thereafter c_{n+1} = c_n^2 / (4 a_{n+1}).
struct AgmSums {
  double agm;   // common limit of the iteration
  double tail;  // sum_{n>=1} 2^(n-1) c_n^2
};

// The relative target can sit below one ulp, so a second stop fires when
// the gap hits its rounding floor and no longer shrinks.
AgmSums agm_sums(double r, double r_comp) {
  double a = 1.0;
  double b = r_comp;
  double c = r * r / (2.0 * (1.0 + r_comp));  // c_1
  double tail = 0.0;
  double weight = 1.0;                        // 2^(n-1) at n = 1
  double prev_gap = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= kAgmMaxIter; ++n) {
    tail += weight * c * c;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    const double gap = std::abs(a - b);
    if (gap <= kAgmRelTol * a || gap >= prev_gap) {
      return {an, tail};
    }
    prev_gap = gap;
    c = c * c / (2.0 * (an + bn));  // c_{n+1} = c_n^2 / (4 a_{n+1})
    weight *= 2.0;
    a = an;
    b = bn;
  }
  throw NoConvergence("agm_sums: no convergence in 64 iterations");
}

// Divergence at r = 1 is detected through r' == 0: for r within an ulp of 1
// the stored complement is what the AGM actually consumes, and a Modulus
// reached via complement() can carry r == 1.0 with a genuinely positive r'.
void require_below_one(const Modulus& m, const char* op) {
  if (m.r_comp() == 0.0) {
    throw DomainError(std::string(op) + ": diverges at modulus 1");
  }
}

}  // namespace

namespace detail {

void require_interior(double r, const char* op) {
  if (!(r >= kInteriorGuard && r <= 1.0 - kInteriorGuard)) {
    throw DomainError(std::string(op) + ": modulus outside guarded (0,1)");
  }
}

}  // namespace detail

Modulus Modulus::from_r(double r) {
  if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
    throw DomainError("Modulus: r must lie in [0,1]");
  }
  return Modulus(r, std::sqrt((1.0 - r) * (1.0 + r)));
}

Modulus Modulus::complement() const { return Modulus(r_comp_, r_); }

double agm(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
    throw DomainError("agm: inputs must be finite and strictly positive");
  }
  double prev_gap = std::numeric_limits<double>::infinity();
  for (int n = 0; n < kAgmMaxIter; ++n) {
    const double gap = std::abs(a - b);
    if (gap <= kAgmRelTol * std::max(a, b) || gap >= prev_gap) {
      return 0.5 * (a + b);
    }
    prev_gap = gap;
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
  }
  throw NoConvergence("agm: no convergence in 64 iterations");
}

double ellint_k(const Modulus& m) {
  require_below_one(m, "ellint_k");
  return kPi / (2.0 * agm_sums(m.r(), m.r_comp()).agm);
}

double ellint_e(const Modulus& m) {
  if (m.r_comp() == 0.0) {
    return 1.0;
  }
  const AgmSums s = agm_sums(m.r(), m.r_comp());
  const double k = kPi / (2.0 * s.agm);
  return k * (1.0 - 0.5 * m.r() * m.r() - s.tail);
}

double ellint_e_minus_rc2_k(const Modulus& m) {
  require_below_one(m, "ellint_e_minus_rc2_k");
  // E - r'^2 K = K (r^2/2 - tail); both terms are O(r^2), no cancellation
  // of the leading order.
  const AgmSums s = agm_sums(m.r(), m.r_comp());
  const double k = kPi / (2.0 * s.agm);
  return k * (0.5 * m.r() * m.r() - s.tail);
}

double ellint_k_minus_e(const Modulus& m) {
  require_below_one(m, "ellint_k_minus_e");
  // K - E = K (r^2/2 + tail).
  const AgmSums s = agm_sums(m.r(), m.r_comp());
  const double k = kPi / (2.0 * s.agm);
  return k * (0.5 * m.r() * m.r() + s.tail);
}

EllipticValues elliptic_values(const Modulus& m) {
  detail::require_interior(m.r(), "elliptic_values");
  const Modulus comp = m.complement();
  return EllipticValues{m, ellint_k(m), ellint_e(m), ellint_k(comp),
                        ellint_e(comp)};
}

double m_func(const EllipticValues& v) {
  const double rc = v.modulus.r_comp();
  return (2.0 / kPi) * rc * rc * v.k * v.k_comp;
}

double m_func(const Modulus& m) { return m_func(elliptic_values(m)); }

double dk_dr(const Modulus& m) {
  detail::require_interior(m.r(), "dk_dr");
  const double rc2 = m.r_comp() * m.r_comp();
  return ellint_e_minus_rc2_k(m) / (m.r() * rc2);
}

double de_dr(const Modulus& m) {
  detail::require_interior(m.r(), "de_dr");
  return -ellint_k_minus_e(m) / m.r();
}

double dm_dr(const EllipticValues& v) {
  return (kPi - 4.0 * v.e_comp * v.k) / (kPi * v.modulus.r());
}

double dm_dr(const Modulus& m) {
  detail::require_interior(m.r(), "dm_dr");
  return dm_dr(elliptic_values(m));
}

}  // namespace elm
