#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "urn/params.hpp"

namespace urn {

// One state's MC-frequency-vs-exact-probability comparison.
struct StateDeviation {
  std::int64_t n = 0;
  std::int64_t y = 0;
  std::int64_t b = 0;
  double expected = 0.0;   // exact DP probability
  std::uint64_t observed = 0;  // MC count over `replicates`
  double z = 0.0;          // |observed/replicates - expected| in standard errors
};

struct OracleComparison {
  std::uint64_t replicates = 0;
  double z_limit = 0.0;
  bool pass = true;
  double max_z = 0.0;
  StateDeviation worst;
  std::vector<StateDeviation> failures;  // states beyond z_limit
};

// Runs replicates of the sampler, counts (y, b) states at each checkpoint,
// and compares every state's frequency against the exact DP law. A state
// fails when it deviates by more than z_limit standard errors, or when the
// sampler visits a state the exact law says is unreachable. colour_bias is
// the fault-injection hook passed through to state_frequencies.
OracleComparison compare_mc_to_exact(const UrnParams& params,
                                     std::span<const std::int64_t> checkpoints,
                                     std::uint64_t replicates, std::uint64_t master_seed,
                                     double z_limit, int workers = 0,
                                     double colour_bias = 0.0);

}  // namespace urn
