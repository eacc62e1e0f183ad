#include "vi/schedules.hpp"

#include <cmath>
#include <sstream>

#include "vi/errors.hpp"

namespace vi {

namespace {
constexpr long long kRangeScanLimit = 1'000'000;
constexpr size_t kMaxReportedViolations = 16;
}  // namespace

Sequence Sequence::power(double coeff, double exponent, long long shift) {
  if (!(coeff > 0.0) || !std::isfinite(coeff)) throw Error::usage("sequence coeff must be positive");
  if (!(exponent >= 0.0) || !std::isfinite(exponent)) {
    throw Error::usage("sequence exponent must be nonnegative");
  }
  if (shift < 0) throw Error::usage("sequence shift must be nonnegative");
  return Sequence(false, coeff, exponent, shift);
}

double Sequence::at(long long n) const {
  if (zero_) return 0.0;
  if (n < 1) throw Error::usage("sequences are indexed from n = 1");
  return coeff_ * std::pow(static_cast<double>(n + shift_), -exponent_);
}

ScheduleValue eval_schedule(const ScheduleSpec& spec, long long n, const SpacePtr& space) {
  if (n < spec.start_index) {
    std::ostringstream msg;
    msg << "schedule evaluated at n = " << n << " before start index " << spec.start_index;
    throw Error::usage(msg.str());
  }
  const double alpha = spec.alpha.at(n);
  const double tau = spec.tail.at(n);
  const double beta = 1.0 - alpha - tau;
  const double mag = spec.error_magnitude.at(n);

  Vector error = Vector::zeros(space);
  if (mag != 0.0) {
    if (spec.error_direction) {
      if (!spec.error_direction->space()->same(*space)) {
        throw Error::usage("error direction space mismatch");
      }
      error = mag * *spec.error_direction;
    } else {
      const Vector e0 = Vector::basis(space, 0);
      error = (mag / norm(e0)) * e0;
    }
  }

  return ScheduleValue{alpha, beta, std::move(error), alpha >= 0.0 && alpha <= 1.0,
                       beta >= 0.0 && beta <= 1.0};
}

ScheduleReport validate_conditions(const ScheduleSpec& spec) {
  ScheduleReport report;

  // alpha_n ~ a n^-p, tau_n ~ t n^-q (or zero), ||e_n|| ~ c n^-r (or zero).
  const double p = spec.alpha.exponent();
  const double a = spec.alpha.coeff();
  const bool tail_zero = spec.tail.is_zero();
  const double q = spec.tail.exponent();
  const double t = spec.tail.coeff();
  const bool err_zero = spec.error_magnitude.is_zero();
  const double r = spec.error_magnitude.exponent();

  const double alpha_limit = p > 0.0 ? 0.0 : a;
  const double tau_limit = tail_zero ? 0.0 : (q > 0.0 ? 0.0 : t);
  const double beta_limit = 1.0 - alpha_limit - tau_limit;

  auto add = [&](const char* id, bool pass, const std::string& rule) {
    report.checks.push_back(ConditionCheck{id, rule, pass});
  };

  {
    const bool pass = p <= 1.0 && beta_limit > 0.0;
    std::ostringstream rule;
    rule << "sum(alpha_n beta_n) diverges iff alpha exponent p <= 1 and lim beta_n > 0; p = " << p
         << ", lim beta_n = " << beta_limit;
    add("a", pass, rule.str());
  }
  {
    const bool pass = tail_zero || q > 1.0;
    std::ostringstream rule;
    if (tail_zero) {
      rule << "tail is identically zero, the sum is finite";
    } else {
      rule << "sum(1 - alpha_n - beta_n) converges iff tail exponent q > 1; q = " << q;
    }
    add("b", pass, rule.str());
  }
  {
    const bool pass = p > 0.0 && (tail_zero || q > p);
    std::ostringstream rule;
    rule << "needs alpha_n -> 0 (p > 0) and tail/alpha -> 0 (q > p); p = " << p << ", q = "
         << (tail_zero ? std::string("inf (zero tail)") : std::to_string(q));
    add("c", pass, rule.str());
  }
  {
    const bool pass = err_zero || r > 1.0;
    std::ostringstream rule;
    if (err_zero) {
      rule << "errors are identically zero, the sum is finite";
    } else {
      rule << "sum(||e_n||) converges iff error exponent r > 1; r = " << r;
    }
    add("d", pass, rule.str());
  }
  {
    const bool pass = err_zero || r > p;
    std::ostringstream rule;
    if (err_zero) {
      rule << "errors are identically zero, the ratio is 0";
    } else {
      rule << "||e_n||/alpha_n -> 0 iff r > p; r = " << r << ", p = " << p;
    }
    add("error_ratio", pass, rule.str());
  }

  report.conditions_pass = true;
  for (const auto& c : report.checks) report.conditions_pass = report.conditions_pass && c.pass;

  report.range_scan_limit = kRangeScanLimit;
  for (long long n = spec.start_index; n <= kRangeScanLimit; ++n) {
    const double alpha = spec.alpha.at(n);
    const double beta = 1.0 - alpha - spec.tail.at(n);
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0) {
      ++report.range_violations;
      if (report.first_range_violations.size() < kMaxReportedViolations) {
        report.first_range_violations.push_back(n);
      }
    }
  }
  report.ranges_pass = report.range_violations == 0;
  report.all_pass = report.conditions_pass && report.ranges_pass;
  return report;
}

StepPolicy StepPolicy::tseng(double gamma, double l, double mu) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw Error::usage("line search requires gamma > 0");
  if (!(l > 0.0 && l < 1.0)) throw Error::usage("line search requires l in (0,1)");
  if (!(mu > 0.0 && mu < 1.0)) throw Error::usage("line search requires mu in (0,1)");
  StepPolicy p;
  p.kind = Kind::tseng_linesearch;
  p.gamma = gamma;
  p.l = l;
  p.mu = mu;
  return p;
}

StepPolicy StepPolicy::residual(double l, double mu) {
  if (!(l > 0.0 && l < 1.0)) throw Error::usage("line search requires l in (0,1)");
  if (!(mu > 0.0 && mu < 1.0)) throw Error::usage("line search requires mu in (0,1)");
  StepPolicy p;
  p.kind = Kind::residual_linesearch;
  p.gamma = 1.0;
  p.l = l;
  p.mu = mu;
  return p;
}

LineSearchResult linesearch_tseng(const StepPolicy& policy, const Operator& A, const ConvexSet& C,
                                  const Vector& x) {
  if (policy.kind != StepPolicy::Kind::tseng_linesearch) {
    throw Error::usage("linesearch_tseng requires a tseng_linesearch policy");
  }
  const Vector Ax = A.apply(x);
  double lambda = policy.gamma;
  for (long trial = 1; trial <= kLineSearchTrialCap; ++trial) {
    Vector y = C.project(x - lambda * Ax);
    const Vector Ay = A.apply(y);
    // An exact fixed point (x == y) makes both sides zero and is accepted.
    if (lambda * norm(Ax - Ay) <= policy.mu * norm(x - y)) {
      return LineSearchResult{lambda, std::move(y), trial};
    }
    lambda *= policy.l;
  }
  throw Error::linesearch("step-size search exceeded 200 trials; operator data is likely not Lipschitz");
}

LineSearchResult linesearch_residual(const StepPolicy& policy, const Operator& A,
                                     const ConvexSet& C, const Vector& x) {
  if (policy.kind != StepPolicy::Kind::residual_linesearch) {
    throw Error::usage("linesearch_residual requires a residual_linesearch policy");
  }
  const Vector Ax = A.apply(x);
  double lambda = 1.0;  // l^0
  for (long trial = 1; trial <= kLineSearchTrialCap; ++trial) {
    Vector y = C.project(x - lambda * Ax);
    const Vector Ay = A.apply(y);
    if (lambda * norm(Ax - Ay) <= policy.mu * norm(x - y)) {
      return LineSearchResult{lambda, std::move(y), trial};
    }
    lambda *= policy.l;
  }
  throw Error::linesearch("step-size search exceeded 200 trials; operator data is likely not Lipschitz");
}

}  // namespace vi
