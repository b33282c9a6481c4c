#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "urn/params.hpp"
#include "urn/rng.hpp"

namespace urn {

struct UrnState {
  std::int64_t y = 1;  // yellow balls
  std::int64_t b = 1;  // blue balls
  std::int64_t n = 0;  // steps taken

  friend bool operator==(const UrnState&, const UrnState&) = default;
};

enum class Scheme : std::uint8_t { friedman, polya };
enum class Colour : std::uint8_t { yellow, blue };

// One step's realized (scheme, colour) pair.
struct DrawEvent {
  Scheme scheme;
  Colour colour;
};

// Validates params and returns the initial state (y0, b0, n=0).
UrnState new_urn(const UrnParams& params);

// Proportion of yellow balls, strictly inside (0, 1) since y, b >= 1.
inline double proportion(const UrnState& s) noexcept {
  return static_cast<double>(s.y) / static_cast<double>(s.y + s.b);
}

struct KernelBranch {
  UrnState next;
  double prob;
};

// The four (scheme, colour) branches out of `s`, with branches landing on
// the same (y, b) merged and zero-probability branches dropped. Sorted by
// (y, b). Probabilities sum to 1.
std::vector<KernelBranch> transition_kernel(const UrnState& s, const UrnParams& params);

// Advances the state by one draw and reports what was drawn. Consumes
// exactly two uniforms in fixed order: u1 < p picks Friedman, then
// u2 < y/(y+b) picks yellow. The order and the constant draw count are part
// of the reproducibility contract.
inline DrawEvent step(UrnState& s, const UrnParams& params, RngStream& rng) noexcept {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const bool friedman = u1 < params.p;
  const bool yellow = u2 < proportion(s);
  if (friedman) {
    s.y += yellow ? params.alpha : params.beta;
    s.b += yellow ? params.beta : params.alpha;
  } else {
    (yellow ? s.y : s.b) += params.gamma;
  }
  ++s.n;
  return {friedman ? Scheme::friedman : Scheme::polya,
          yellow ? Colour::yellow : Colour::blue};
}

struct TrajectoryResult {
  std::vector<std::pair<std::int64_t, UrnState>> checkpoints;  // (n, state)
  std::int64_t friedman_steps = 0;
  std::int64_t polya_steps = 0;
};

// Runs n_steps draws from a fresh urn, recording the state at each
// checkpoint. Checkpoints must be non-decreasing and inside [0, n_steps].
// Consumes exactly 2 * n_steps uniforms regardless of checkpoints.
TrajectoryResult run_trajectory(const UrnParams& params, std::int64_t n_steps,
                                RngStream& rng,
                                std::span<const std::int64_t> checkpoints);

}  // namespace urn
