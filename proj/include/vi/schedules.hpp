#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vi/hilbert.hpp"
#include "vi/operators.hpp"
#include "vi/sets.hpp"

namespace vi {

/// Coefficient sequence from the power family coeff * (n + shift)^(-exponent),
/// or identically zero. The optional shift lets sequences like 1/(n+1) be
/// expressed exactly while n remains the iteration counter.
class Sequence {
public:
  static Sequence zero() { return Sequence(true, 0.0, 0.0, 0); }
  static Sequence power(double coeff, double exponent, long long shift = 0);

  bool is_zero() const noexcept { return zero_; }
  double coeff() const noexcept { return coeff_; }
  double exponent() const noexcept { return exponent_; }
  long long shift() const noexcept { return shift_; }

  double at(long long n) const;

private:
  Sequence(bool zero, double coeff, double exponent, long long shift)
      : zero_(zero), coeff_(coeff), exponent_(exponent), shift_(shift) {}

  bool zero_;
  double coeff_;
  double exponent_;
  long long shift_;
};

/// Coefficient schedules of the inexact viscosity iteration
/// x_{n+1} = alpha_n f(x_n) + beta_n z_n + e_n. beta_n is derived from the
/// tail sequence tau_n = 1 - alpha_n - beta_n, which is the combination the
/// summability conditions constrain.
struct ScheduleSpec {
  Sequence alpha = Sequence::power(1.0, 1.0);
  Sequence tail = Sequence::zero();
  Sequence error_magnitude = Sequence::zero();
  /// Unit direction of e_n; first basis direction (normalized in the space
  /// norm) when absent.
  std::optional<Vector> error_direction;
  long long start_index = 1;
};

struct ScheduleValue {
  double alpha;
  double beta;
  Vector error;
  bool alpha_in_range;  // alpha_n in [0,1]
  bool beta_in_range;   // beta_n in [0,1]
};

/// Evaluate (alpha_n, beta_n, e_n) at iteration n. Out-of-range coefficients
/// are returned as-is with the range flags cleared (faithful mode); callers
/// that want strict behavior reject on a cleared flag.
ScheduleValue eval_schedule(const ScheduleSpec& spec, long long n, const SpacePtr& space);

struct ConditionCheck {
  std::string id;    // "a", "b", "c", "d", "error_ratio"
  std::string rule;  // the closed-form p-series rule that decided it
  bool pass;
};

struct ScheduleReport {
  std::vector<ConditionCheck> checks;
  bool conditions_pass = false;
  long long range_scan_limit = 0;
  long long range_violations = 0;
  std::vector<long long> first_range_violations;  // at most 16 indices
  bool ranges_pass = false;
  bool all_pass = false;
};

/// Decide the strong-convergence conditions on the coefficient schedules by
/// closed-form p-series rules, and scan n <= 10^6 for out-of-range alpha_n
/// or beta_n.
ScheduleReport validate_conditions(const ScheduleSpec& spec);

/// Step-size selection: a fixed lambda (taken from the problem
/// configuration), the backtracking search that compares against the step
/// gap ||x - y||, or the variant that compares against the natural residual.
struct StepPolicy {
  enum class Kind { fixed, tseng_linesearch, residual_linesearch };

  Kind kind = Kind::fixed;
  double gamma = 1.0;  // initial trial step (tseng_linesearch only)
  double l = 0.5;      // backtracking ratio
  double mu = 0.9;     // acceptance fraction

  static StepPolicy fixed() { return StepPolicy{}; }
  static StepPolicy tseng(double gamma, double l, double mu);
  static StepPolicy residual(double l, double mu);
};

inline constexpr long kLineSearchTrialCap = 200;

struct LineSearchResult {
  double lambda;
  Vector y;  // projection P_C(x - lambda A x) at the accepted lambda
  long trials;
};

/// Largest lambda in {gamma, gamma*l, gamma*l^2, ...} with
/// lambda * ||Ax - Ay|| <= mu * ||x - y||, where y = P_C(x - lambda A x).
LineSearchResult linesearch_tseng(const StepPolicy& policy, const Operator& A, const ConvexSet& C,
                                  const Vector& x);

/// Smallest m >= 0 such that lambda = l^m satisfies
/// lambda * ||Ax - Ay|| <= mu * ||x - P_C(x - lambda A x)||.
LineSearchResult linesearch_residual(const StepPolicy& policy, const Operator& A,
                                     const ConvexSet& C, const Vector& x);

}  // namespace vi
