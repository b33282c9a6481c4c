#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace urn {

// Exact probability num/den. Kept next to the double when the user wrote p
// as a fraction, so zero-slope detection can run in exact arithmetic.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// The model: draw a ball, and with probability p put it back with alpha
// balls of the drawn colour plus beta of the other (Friedman), otherwise
// with gamma balls of the drawn colour (Polya).
struct UrnParams {
  std::int64_t y0 = 1;     // initial yellow balls, >= 1
  std::int64_t b0 = 1;     // initial blue balls, >= 1
  std::int64_t alpha = 1;  // Friedman same-colour addition, >= 0
  std::int64_t beta = 1;   // Friedman opposite-colour addition, >= 0
  std::int64_t gamma = 1;  // Polya same-colour addition, >= 0
  double p = 1.0;          // probability of applying Friedman's rule
  std::optional<Fraction> p_fraction;  // exact p when supplied as "num/den"

  // Throws validation_error naming the offending field.
  void validate() const;

  // All five integers >= 1 and p > 0: the regime in which the proportion of
  // either colour converges a.s. to 1/2. Out-of-regime parameters are still
  // simulated, they just carry no convergence guarantee.
  bool within_theorem() const noexcept {
    return alpha >= 1 && beta >= 1 && gamma >= 1 && p > 0.0;
  }
};

// Parses "0.05" or "1/20" into (value, exact fraction when given as one).
// Throws validation_error("p", ...) on malformed input or values outside
// [0, 1].
std::pair<double, std::optional<Fraction>> parse_probability(std::string_view text);

}  // namespace urn
