#include "urn/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "urn/errors.hpp"

namespace urn {

namespace {

double theta_of(const UrnParams& pr) {
  return static_cast<double>(pr.alpha - pr.beta) * pr.p +
         static_cast<double>(pr.gamma) * (1.0 - pr.p);
}

double denom_of(const UrnParams& pr) {
  return static_cast<double>(pr.alpha + pr.beta) * pr.p +
         static_cast<double>(pr.gamma) * (1.0 - pr.p);
}

}  // namespace

Rational theta_exact(const UrnParams& pr) {
  const Rational p = exact_p(pr);
  return (pr.alpha - pr.beta) * p + pr.gamma * (1 - p);
}

Rational denom_exact(const UrnParams& pr) {
  const Rational p = exact_p(pr);
  return (pr.alpha + pr.beta) * p + pr.gamma * (1 - p);
}

Rational ell_exact(const UrnParams& pr, const Rational& x) {
  const Rational d = denom_exact(pr);
  if (d == 0) throw std::domain_error("ell undefined: denominator is zero");
  return (theta_exact(pr) * x + pr.beta * exact_p(pr)) / d;
}

ThetaCase classify_case(const UrnParams& params) {
  params.validate();
  if (params.p_fraction) {
    const Rational t = theta_exact(params);
    if (t == 0) return ThetaCase::zero;
    return t > 0 ? ThetaCase::positive : ThetaCase::negative;
  }
  const double t = theta_of(params);
  if (std::abs(t) < 1e-12) return ThetaCase::zero;
  return t > 0 ? ThetaCase::positive : ThetaCase::negative;
}

std::optional<double> case3_p(std::int64_t alpha, std::int64_t beta, std::int64_t gamma) {
  const std::int64_t denominator = beta + gamma - alpha;
  if (denominator <= 0) return std::nullopt;
  const double p = static_cast<double>(gamma) / static_cast<double>(denominator);
  if (p <= 0.0 || p > 1.0) return std::nullopt;
  return p;
}

std::optional<std::pair<double, double>> polya_limit_params(const UrnParams& params) {
  params.validate();
  if (params.p != 0.0 || params.gamma < 1) return std::nullopt;
  return std::pair{static_cast<double>(params.y0) / static_cast<double>(params.gamma),
                   static_cast<double>(params.b0) / static_cast<double>(params.gamma)};
}

double ell(const UrnParams& params, double x) {
  const double d = denom_of(params);
  if (d == 0.0) throw std::domain_error("ell undefined: denominator is zero");
  return (theta_of(params) * x + static_cast<double>(params.beta) * params.p) / d;
}

double envelope(const UrnParams& params, std::int64_t n) {
  params.validate();
  if (!params.within_theorem())
    throw validation_error("params", "envelope requires within-theorem parameters");
  if (n < 0) throw validation_error("n", "n must be >= 0");
  const double slope = theta_of(params) / denom_of(params);
  return 0.5 * (1.0 + std::pow(slope, static_cast<double>(n)));
}

TheoryReport analyze(const UrnParams& params) {
  params.validate();
  TheoryReport report;
  report.theta = theta_of(params);
  report.denom = denom_of(params);
  report.slope = report.denom == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                     : report.theta / report.denom;
  report.theta_case = classify_case(params);
  report.within_theorem = params.within_theorem();
  if (params.beta >= 1 && params.p > 0.0) report.fixed_point = 0.5;
  report.polya_limit = polya_limit_params(params);
  return report;
}

}  // namespace urn
