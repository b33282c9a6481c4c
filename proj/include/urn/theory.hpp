#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "urn/params.hpp"
#include "urn/rational.hpp"

namespace urn {

// Sign of theta = (alpha - beta) p + gamma (1 - p); splits the convergence
// argument into its three cases.
enum class ThetaCase { positive, negative, zero };

struct TheoryReport {
  double theta = 0.0;  // (alpha - beta) p + gamma (1 - p)
  double denom = 0.0;  // (alpha + beta) p + gamma (1 - p)
  double slope = 0.0;  // theta / denom; NaN when denom == 0
  ThetaCase theta_case = ThetaCase::zero;
  // 1/2 whenever the affine map is a strict contraction (beta p > 0);
  // absent for the degenerate maps with slope 1 or undefined slope.
  std::optional<double> fixed_point;
  // (y0/gamma, b0/gamma) iff p == 0 and gamma >= 1: the parameters of the
  // Beta limit law of X_n in the pure-Polya regime.
  std::optional<std::pair<double, double>> polya_limit;
  bool within_theorem = false;
};

// Fills every TheoryReport field from validated params.
TheoryReport analyze(const UrnParams& params);

// The affine map l(x) = (theta x + beta p) / denom. Throws std::domain_error
// when denom == 0 (degenerate out-of-theorem parameters only).
double ell(const UrnParams& params, double x);

// n-fold iterate l^(n)(1) via the closed form (1 + (theta/denom)^n) / 2.
// Requires within-theorem params.
double envelope(const UrnParams& params, std::int64_t n);

// Sign of theta; exact rational arithmetic when p carries a declared
// fraction, |theta| < 1e-12 counts as zero otherwise.
ThetaCase classify_case(const UrnParams& params);

// The unique p in (0, 1] with theta = 0, namely gamma / (beta + gamma -
// alpha), when that expression is defined and lands in (0, 1].
std::optional<double> case3_p(std::int64_t alpha, std::int64_t beta, std::int64_t gamma);

// Beta-law parameters (y0/gamma, b0/gamma) for the p = 0 limit; nullopt when
// p > 0 or gamma == 0.
std::optional<std::pair<double, double>> polya_limit_params(const UrnParams& params);

// Exact-arithmetic counterparts used by tests and by case detection.
Rational theta_exact(const UrnParams& params);
Rational denom_exact(const UrnParams& params);
Rational ell_exact(const UrnParams& params, const Rational& x);

}  // namespace urn
