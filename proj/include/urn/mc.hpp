#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urn/params.hpp"

namespace urn {

// Streaming count/mean/M2 with min/max, mergeable for parallel reduction.
struct MomentAccumulator {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from the running mean
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void add(double x) noexcept {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
    if (x < min) min = x;
    if (x > max) max = x;
  }

  // Sample variance; requires count >= 2.
  double variance() const noexcept {
    return m2 / static_cast<double>(count - 1);
  }
};

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b) noexcept;

// Uniform partition of [0, 1] into `bins` cells; a sample lands in
// floor(x * bins), with x = 1 clamped into the last cell.
class Histogram {
 public:
  explicit Histogram(int bins);

  void add(double x) noexcept {
    auto idx = static_cast<std::size_t>(x * static_cast<double>(counts_.size()));
    if (idx >= counts_.size()) idx = counts_.size() - 1;
    ++counts_[idx];
    ++total_;
  }

  void merge_from(const Histogram& other);

  int bins() const noexcept { return static_cast<int>(counts_.size()); }
  std::uint64_t total() const noexcept { return total_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  double bin_left(int i) const noexcept { return static_cast<double>(i) / bins(); }
  double bin_right(int i) const noexcept { return static_cast<double>(i + 1) / bins(); }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Per-checkpoint aggregate over replicates.
struct CheckpointStats {
  std::int64_t n = 0;
  MomentAccumulator moments;
  Histogram hist;
  std::uint64_t near_half = 0;  // replicates with |x - 1/2| <= 0.1

  explicit CheckpointStats(std::int64_t n_, int bins) : n(n_), hist(bins) {}

  double mass_near_half() const noexcept {
    return static_cast<double>(near_half) / static_cast<double>(moments.count);
  }
};

struct ReplicateSummary {
  UrnParams params;
  std::int64_t n_steps = 0;
  std::uint64_t replicates = 0;
  std::uint64_t master_seed = 0;
  std::vector<CheckpointStats> checkpoints;
};

// Monte Carlo over independent replicates; replicate r always draws from
// RngStream(master_seed, r). Replicates are folded in ascending order
// within fixed-size chunks and the chunks combined by a pairwise tree over
// chunk index, so the result is bit-identical for any worker count.
// workers = 0 means all available.
ReplicateSummary run_replicates(const UrnParams& params, std::int64_t n_steps,
                                std::uint64_t replicates, std::uint64_t master_seed,
                                std::span<const std::int64_t> checkpoints, int bins,
                                int workers = 0);

// Single-threaded reference: one plain ascending fold over replicates.
// Kept for correctness tests and the benchmark; integer outputs match
// run_replicates exactly, moments to floating-point reduction error.
ReplicateSummary run_replicates_serial(const UrnParams& params, std::int64_t n_steps,
                                       std::uint64_t replicates, std::uint64_t master_seed,
                                       std::span<const std::int64_t> checkpoints, int bins);

// X_n for every (checkpoint, replicate), indexed [checkpoint][replicate].
// Writes are addressed by replicate index, so the matrix is identical for
// any worker count.
std::vector<std::vector<double>> collect_checkpoint_samples(
    const UrnParams& params, std::int64_t n_steps,
    std::span<const std::int64_t> checkpoints, std::uint64_t replicates,
    std::uint64_t master_seed, int workers = 0);

// Observed (y, b) counts at each checkpoint, sorted by state. colour_bias
// shifts the yellow threshold to u2 < x + colour_bias; nonzero values are a
// fault-injection hook for validation negative controls and bypass the
// production stepper.
struct StateCounts {
  std::int64_t n = 0;
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::uint64_t>> counts;
};

std::vector<StateCounts> state_frequencies(const UrnParams& params,
                                           std::span<const std::int64_t> checkpoints,
                                           std::uint64_t replicates,
                                           std::uint64_t master_seed, int workers = 0,
                                           double colour_bias = 0.0);

struct ConvergencePoint {
  std::int64_t n = 0;
  double mean = 0.0;
  double variance = 0.0;
  double q90_abs_dev = 0.0;  // 90th percentile of |X_n - 1/2|
};

struct ConvergenceCurve {
  std::vector<ConvergencePoint> points;
  std::optional<std::string> warning;  // set for out-of-theorem parameters
};

// Moments and 90th-percentile deviation from 1/2 at geometrically spaced
// checkpoints 1, 2, 4, ..., n_max.
ConvergenceCurve convergence_curve(const UrnParams& params, std::int64_t n_max,
                                   std::uint64_t replicates, std::uint64_t master_seed,
                                   int workers = 0);

}  // namespace urn
