#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace urn {

// Raised when a parameter fails its construction-time checks. Carries the
// name of the offending field so callers can report it precisely.
class validation_error : public std::invalid_argument {
 public:
  validation_error(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Raised by the exact DP when a level's support would exceed the frontier
// limit. Reports the level that was reached.
class frontier_limit_error : public std::runtime_error {
 public:
  frontier_limit_error(std::int64_t level, std::size_t states, std::size_t limit)
      : std::runtime_error("frontier limit exceeded at level " + std::to_string(level) +
                           ": " + std::to_string(states) + " states > limit " +
                           std::to_string(limit)),
        level_(level) {}

  std::int64_t level_reached() const noexcept { return level_; }

 private:
  std::int64_t level_;
};

}  // namespace urn
