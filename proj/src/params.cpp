#include "urn/params.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "urn/errors.hpp"

namespace urn {

void UrnParams::validate() const {
  if (y0 < 1) throw validation_error("y0", "y0 must be >= 1, got " + std::to_string(y0));
  if (b0 < 1) throw validation_error("b0", "b0 must be >= 1, got " + std::to_string(b0));
  if (alpha < 0)
    throw validation_error("alpha", "alpha must be >= 0, got " + std::to_string(alpha));
  if (beta < 0)
    throw validation_error("beta", "beta must be >= 0, got " + std::to_string(beta));
  if (gamma < 0)
    throw validation_error("gamma", "gamma must be >= 0, got " + std::to_string(gamma));
  if (alpha + beta + gamma < 1)
    throw validation_error("alpha+beta+gamma",
                           "alpha + beta + gamma must be >= 1; the urn would never change");
  if (!(p >= 0.0 && p <= 1.0))
    throw validation_error("p", "p must lie in [0, 1], got " + std::to_string(p));
  if (p_fraction) {
    if (p_fraction->den < 1 || p_fraction->num < 0 || p_fraction->num > p_fraction->den)
      throw validation_error("p", "p fraction must satisfy 0 <= num <= den, den >= 1");
    if (p_fraction->value() != p)
      throw validation_error("p", "p fraction disagrees with its double value");
  }
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw validation_error("p", "malformed integer in probability: '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::pair<double, std::optional<Fraction>> parse_probability(std::string_view text) {
  if (text.empty()) throw validation_error("p", "empty probability");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Fraction f{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    if (f.den < 1) throw validation_error("p", "fraction denominator must be >= 1");
    if (f.num < 0 || f.num > f.den)
      throw validation_error("p", "fraction must lie in [0, 1]: '" + std::string(text) + "'");
    return {f.value(), f};
  }
  std::string buf(text);
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (errno != 0 || end != buf.c_str() + buf.size() || !std::isfinite(value))
    throw validation_error("p", "malformed probability: '" + buf + "'");
  if (value < 0.0 || value > 1.0)
    throw validation_error("p", "p must lie in [0, 1], got " + buf);
  return {value, std::nullopt};
}

}  // namespace urn
