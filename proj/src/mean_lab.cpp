#include "elm/mean_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace elm {

namespace {

constexpr double kSampleLo = 1e-4;
constexpr double kSampleHi = 1.0 - 1e-4;
constexpr double kViolationRelTol = 1e-11;
constexpr double kWitnessMargin = 1e-9;

double modular(double r) { return m_func(Modulus::from_r(r)); }

// Uniform double in [lo, hi), reproducible across library versions
// (std::uniform_real_distribution is not pinned by the standard).
double uniform(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

// delta = m(M_lambda(x,y)) - M_lambda(m(x), m(y)); the forward inequality
// asserts delta >= 0. Also reports the outer value for relative tolerances.
struct Gap {
  double delta;
  double outer;
};

Gap inequality_gap(MeanOrder order, double x, double y) {
  const double t = power_mean(order, x, y);
  const double outer = modular(t);
  const double inner = power_mean(order, modular(x), modular(y));
  return {outer - inner, outer};
}

}  // namespace

double power_mean(MeanOrder order, double x, double y) {
  if (!std::isfinite(order.lambda)) {
    throw ParamError("power_mean: order must be finite");
  }
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("power_mean: arguments must be strictly positive");
  }
  if (order.lambda == 0.0) {
    return std::sqrt(x) * std::sqrt(y);
  }
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  if (hi == lo) {
    return hi;
  }
  // Factor out whichever argument makes the remaining ratio^lambda <= 1,
  // so nothing overflows on the way to a representable result. expm1/log1p
  // keep the value continuous across lambda -> 0, where 1/lambda would
  // otherwise amplify the rounding of (1 + t)/2.
  const double t1 = std::expm1(-std::abs(order.lambda) * std::log(hi / lo));
  const double base = order.lambda > 0.0 ? hi : lo;
  return base * std::exp(std::log1p(0.5 * t1) / order.lambda);
}

VerificationReport verify_theorem(MeanOrder order, Direction direction,
                                  std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw ParamError("verify_theorem: samples must be >= 1");
  }
  std::mt19937_64 gen(seed);
  VerificationReport report{order.lambda, samples, direction, 0,
                            direction == Direction::kForward
                                ? std::numeric_limits<double>::infinity()
                                : -std::numeric_limits<double>::infinity(),
                            std::nullopt, seed};
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x = uniform(gen, kSampleLo, kSampleHi);
    const double y = uniform(gen, kSampleLo, kSampleHi);
    const Gap gap = inequality_gap(order, x, y);
    const double tol = kViolationRelTol * (1.0 + std::abs(gap.outer));
    const bool extreme = direction == Direction::kForward
                             ? gap.delta < report.worst_margin
                             : gap.delta > report.worst_margin;
    const bool violated = direction == Direction::kForward
                              ? gap.delta < -tol
                              : gap.delta > tol;
    if (violated) {
      ++report.violations;
    }
    if (extreme) {
      report.worst_margin = gap.delta;
      if (violated) {
        report.witness = std::make_pair(x, y);
      }
    }
  }
  if (report.violations == 0) {
    report.witness.reset();
  }
  return report;
}

std::optional<std::pair<double, double>> find_counterexample(
    MeanOrder order, Direction direction, std::int64_t budget,
    std::uint64_t seed) {
  if (budget < 1) {
    throw ParamError("find_counterexample: budget must be >= 1");
  }
  std::mt19937_64 gen(seed);
  std::int64_t used = 0;
  const auto score = [&](double x, double y) {
    ++used;
    const double delta = inequality_gap(order, x, y).delta;
    return direction == Direction::kForward ? -delta : delta;
  };
  const auto clamp = [](double v) {
    return std::clamp(v, kSampleLo, kSampleHi);
  };
  while (used < budget) {
    double x = uniform(gen, kSampleLo, kSampleHi);
    double y = uniform(gen, kSampleLo, kSampleHi);
    double best = score(x, y);
    for (double step = 0.1; step >= 1e-6 && used < budget; step *= 0.5) {
      bool moved = true;
      while (moved && used < budget) {
        moved = false;
        for (const auto& [dx, dy] : {std::pair{step, 0.0}, {-step, 0.0},
                                     {0.0, step}, {0.0, -step}}) {
          const double nx = clamp(x + dx);
          const double ny = clamp(y + dy);
          if (nx == x && ny == y) {
            continue;
          }
          const double s = score(nx, ny);
          if (s > best) {
            best = s;
            x = nx;
            y = ny;
            moved = true;
          }
          if (used >= budget) {
            break;
          }
        }
      }
      if (best > kWitnessMargin) {
        return std::make_pair(x, y);
      }
    }
    if (best > kWitnessMargin) {
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

double check_equality_condition(MeanOrder order, double x) {
  detail::require_interior(x, "check_equality_condition");
  const double mx = modular(x);
  return std::abs(modular(power_mean(order, x, x)) -
                  power_mean(order, mx, mx));
}

double proof_f(MeanOrder order, double x, double y) {
  if (order.lambda == 0.0) {
    throw ParamError("proof_f: order must be nonzero");
  }
  if (!(0.0 < x && x <= y && y < 1.0)) {
    throw DomainError("proof_f: need 0 < x <= y < 1");
  }
  const double t = power_mean(order, x, y);
  return std::pow(modular(t), order.lambda) -
         0.5 * (std::pow(modular(x), order.lambda) +
                std::pow(modular(y), order.lambda));
}

double proof_g(double x, double y) {
  if (!(0.0 < x && x <= y && y < 1.0)) {
    throw DomainError("proof_g: need 0 < x <= y < 1");
  }
  const double mt = modular(std::sqrt(x * y));
  return mt * mt / (modular(x) * modular(y));
}

CEstimate estimate_c(std::int64_t initial_points, double tol) {
  if (initial_points < 1001) {
    throw ParamError("estimate_c: need at least 1001 initial points");
  }
  if (!(tol > 0.0)) {
    throw ParamError("estimate_c: tol must be positive");
  }
  constexpr double kLo = 1e-9;
  constexpr double kHi = 1.0;
  constexpr int kMaxDoublings = 20;
  const auto value = [](double r) {
    return critical_order(Modulus::from_r(r));
  };

  std::int64_t n = initial_points;
  double prev_c = std::numeric_limits<double>::quiet_NaN();
  for (int pass = 0; pass <= kMaxDoublings; ++pass) {
    // Full scan; H is not assumed unimodal, so the bracket comes from the
    // best grid point rather than any descent.
    const double h_step = (kHi - kLo) / static_cast<double>(n - 1);
    std::int64_t best_i = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < n; ++i) {
      const double v = value(kLo + h_step * static_cast<double>(i));
      if (v > best_v) {
        best_v = v;
        best_i = i;
      }
    }
    double a = kLo + h_step * static_cast<double>(std::max<std::int64_t>(
                                 best_i - 1, 0));
    double b = kLo + h_step * static_cast<double>(std::min<std::int64_t>(
                                 best_i + 1, n - 1));

    // Golden-section refinement inside the bracket.
    constexpr double kInvPhi = 0.6180339887498949;
    double c1 = b - kInvPhi * (b - a);
    double c2 = a + kInvPhi * (b - a);
    double v1 = value(c1);
    double v2 = value(c2);
    while (b - a > 1e-13) {
      if (v1 > v2) {
        b = c2;
        c2 = c1;
        v2 = v1;
        c1 = b - kInvPhi * (b - a);
        v1 = value(c1);
      } else {
        a = c1;
        c1 = c2;
        v1 = v2;
        c2 = a + kInvPhi * (b - a);
        v2 = value(c2);
      }
    }
    double r0 = 0.5 * (a + b);
    double c = value(r0);
    // The refined point must dominate the grid; if the bracket hid a dip,
    // fall back to the grid argmax.
    if (best_v > c) {
      r0 = kLo + h_step * static_cast<double>(best_i);
      c = best_v;
    }

    if (pass > 0) {
      const double delta = std::abs(c - prev_c);
      if (delta < tol) {
        return CEstimate{c, r0, n, delta};
      }
    }
    prev_c = c;
    n = 2 * n - 1;
  }
  throw NoConvergence("estimate_c: C did not stabilize in 20 doublings");
}

}  // namespace elm
