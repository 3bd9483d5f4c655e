#ifndef ELM_MEAN_LAB_HPP
#define ELM_MEAN_LAB_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "elm/analysis.hpp"
#include "elm/elliptic.hpp"

namespace elm {

enum class Direction { kForward, kReverse };

/// Result of a randomized check of the power-mean inequality for m(r).
/// `worst_margin` is the extreme of delta = m(M_lambda(x,y)) -
/// M_lambda(m(x), m(y)) over the sample: the minimum for the forward
/// direction, the maximum for the reverse.
struct VerificationReport {
  double lambda;
  std::int64_t samples;
  Direction direction;
  std::int64_t violations;
  double worst_margin;
  std::optional<std::pair<double, double>> witness;
  std::uint64_t seed;
};

/// Estimated maximum C of the critical-order function H over (0,1].
struct CEstimate {
  double c;                 ///< estimated maximum, equals critical_order(r0)
  double r0;                ///< argmax
  std::int64_t grid_points; ///< scan resolution at convergence
  double refinement_delta;  ///< |change in C| over the last grid doubling
};

/// Power mean M_lambda(x, y) for x, y > 0; lambda = 0 is the geometric mean.
/// Factored so that no intermediate overflows for any representable result.
double power_mean(MeanOrder order, double x, double y);

/// Draws `samples` pairs (x,y) uniformly from [1e-4, 1-1e-4]^2 and counts
/// violations of the requested direction of M_lambda(m(x),m(y)) <=
/// m(M_lambda(x,y)) beyond a relative tolerance of 1e-11. Deterministic
/// given the seed.
VerificationReport verify_theorem(MeanOrder order, Direction direction,
                                  std::int64_t samples, std::uint64_t seed);

/// Random restarts plus coordinate hill-climb with step halving from 0.1 to
/// 1e-6, looking for a pair that violates the requested direction by more
/// than 1e-9. Returns the witness, or nullopt if the budget runs out.
std::optional<std::pair<double, double>> find_counterexample(
    MeanOrder order, Direction direction, std::int64_t budget,
    std::uint64_t seed);

/// |m(M_lambda(x,x)) - M_lambda(m(x), m(x))|; both sides collapse to m(x),
/// so the result is rounding noise.
double check_equality_condition(MeanOrder order, double x);

/// F(x,y) = m(M_lambda(x,y))^lambda - (m(x)^lambda + m(y)^lambda)/2 for
/// lambda != 0 and 0 < x <= y < 1; F(y,y) = 0 and F is monotone in x with
/// direction depending on the sign of lambda.
double proof_f(MeanOrder order, double x, double y);

/// G(x,y) = m(sqrt(xy))^2 / (m(x) m(y)) for 0 < x <= y < 1; G >= 1 with
/// equality only at x = y.
double proof_g(double x, double y);

/// Maximizes H over (0,1]: uniform scan (no unimodality assumed), golden-
/// section refinement around the best grid point, then grid doubling until
/// C moves by less than `tol`. Throws NoConvergence after 20 doublings.
CEstimate estimate_c(std::int64_t initial_points, double tol);

}  // namespace elm

#endif  // ELM_MEAN_LAB_HPP
