#include "urn/model.hpp"

#include <algorithm>

#include "urn/errors.hpp"

namespace urn {

UrnState new_urn(const UrnParams& params) {
  params.validate();
  return {params.y0, params.b0, 0};
}

std::vector<KernelBranch> transition_kernel(const UrnState& s, const UrnParams& params) {
  const double x = proportion(s);
  const double p = params.p;
  KernelBranch raw[4] = {
      {{s.y + params.alpha, s.b + params.beta, s.n + 1}, p * x},          // Friedman, yellow
      {{s.y + params.beta, s.b + params.alpha, s.n + 1}, p * (1.0 - x)},  // Friedman, blue
      {{s.y + params.gamma, s.b, s.n + 1}, (1.0 - p) * x},                // Polya, yellow
      {{s.y, s.b + params.gamma, s.n + 1}, (1.0 - p) * (1.0 - x)},        // Polya, blue
  };
  std::vector<KernelBranch> out;
  out.reserve(4);
  for (const auto& branch : raw) {
    if (branch.prob == 0.0) continue;
    out.push_back(branch);
  }
  std::sort(out.begin(), out.end(), [](const KernelBranch& lhs, const KernelBranch& rhs) {
    return std::pair(lhs.next.y, lhs.next.b) < std::pair(rhs.next.y, rhs.next.b);
  });
  std::size_t merged = 0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].next == out[merged].next) {
      out[merged].prob += out[i].prob;
    } else {
      out[++merged] = out[i];
    }
  }
  out.resize(out.empty() ? 0 : merged + 1);
  return out;
}

TrajectoryResult run_trajectory(const UrnParams& params, std::int64_t n_steps,
                                RngStream& rng,
                                std::span<const std::int64_t> checkpoints) {
  if (n_steps < 0)
    throw validation_error("n_steps", "n_steps must be >= 0, got " + std::to_string(n_steps));
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 || checkpoints[i] > n_steps)
      throw validation_error("checkpoints", "checkpoint " + std::to_string(checkpoints[i]) +
                                                " outside [0, " + std::to_string(n_steps) + "]");
    if (i > 0 && checkpoints[i] < checkpoints[i - 1])
      throw validation_error("checkpoints", "checkpoints must be sorted ascending");
  }

  TrajectoryResult out;
  out.checkpoints.reserve(checkpoints.size());
  UrnState state = new_urn(params);
  std::size_t next_ck = 0;
  const auto record = [&](std::int64_t n) {
    while (next_ck < checkpoints.size() && checkpoints[next_ck] == n) {
      out.checkpoints.emplace_back(n, state);
      ++next_ck;
    }
  };
  record(0);
  for (std::int64_t t = 1; t <= n_steps; ++t) {
    const DrawEvent event = step(state, params, rng);
    (event.scheme == Scheme::friedman ? out.friedman_steps : out.polya_steps) += 1;
    record(t);
  }
  return out;
}

}  // namespace urn
