#include "urn/mc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "urn/errors.hpp"
#include "urn/model.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace urn {

namespace {

// Replicates per reduction leaf. Fixed: the reduction tree depends only on
// the replicate count, never on the worker count.
constexpr std::uint64_t kChunk = 4096;

int resolve_workers(int workers) {
  if (workers > 0) return workers;
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void check_checkpoints(std::span<const std::int64_t> checkpoints, std::int64_t n_steps) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 0 || checkpoints[i] > n_steps)
      throw validation_error("checkpoints",
                             "checkpoint " + std::to_string(checkpoints[i]) + " outside [0, " +
                                 std::to_string(n_steps) + "]");
    if (i > 0 && checkpoints[i] < checkpoints[i - 1])
      throw validation_error("checkpoints", "checkpoints must be sorted ascending");
  }
}

// One replicate: walk the urn and hand X_n to `record` at each checkpoint.
template <class Record>
void walk_replicate(const UrnParams& params, std::int64_t n_steps,
                    std::span<const std::int64_t> checkpoints, RngStream& rng,
                    Record&& record) {
  UrnState state{params.y0, params.b0, 0};
  std::size_t ck = 0;
  while (ck < checkpoints.size() && checkpoints[ck] == 0) record(ck++, state);
  for (std::int64_t t = 1; t <= n_steps; ++t) {
    step(state, params, rng);
    while (ck < checkpoints.size() && checkpoints[ck] == t) record(ck++, state);
  }
}

std::vector<CheckpointStats> make_stats(std::span<const std::int64_t> checkpoints, int bins) {
  std::vector<CheckpointStats> stats;
  stats.reserve(checkpoints.size());
  for (const std::int64_t n : checkpoints) stats.emplace_back(n, bins);
  return stats;
}

void fold_replicate_range(const UrnParams& params, std::int64_t n_steps,
                          std::span<const std::int64_t> checkpoints,
                          std::uint64_t master_seed, std::uint64_t r_begin,
                          std::uint64_t r_end, std::vector<CheckpointStats>& stats) {
  for (std::uint64_t r = r_begin; r < r_end; ++r) {
    RngStream rng(master_seed, r);
    walk_replicate(params, n_steps, checkpoints, rng,
                   [&](std::size_t ck, const UrnState& state) {
                     const double x = proportion(state);
                     stats[ck].moments.add(x);
                     stats[ck].hist.add(x);
                     if (std::abs(x - 0.5) <= 0.1) ++stats[ck].near_half;
                   });
  }
}

void merge_into(std::vector<CheckpointStats>& into, const std::vector<CheckpointStats>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    into[i].moments = merge(into[i].moments, from[i].moments);
    into[i].hist.merge_from(from[i].hist);
    into[i].near_half += from[i].near_half;
  }
}

// Pairwise tree over leaf index: (0,1), (2,3), ... then recurse.
template <class T, class Merge>
T tree_reduce(std::vector<T>& leaves, Merge&& merge_pair) {
  while (leaves.size() > 1) {
    const std::size_t pairs = leaves.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i)
      merge_pair(leaves[2 * i], leaves[2 * i + 1]);
    std::vector<T> next;
    next.reserve(pairs + leaves.size() % 2);
    for (std::size_t i = 0; i < pairs; ++i) next.push_back(std::move(leaves[2 * i]));
    if (leaves.size() % 2 == 1) next.push_back(std::move(leaves.back()));
    leaves = std::move(next);
  }
  return std::move(leaves.front());
}

void validate_mc_args(const UrnParams& params, std::int64_t n_steps,
                      std::uint64_t replicates, std::span<const std::int64_t> checkpoints,
                      int bins) {
  params.validate();
  if (n_steps < 0) throw validation_error("n_steps", "n_steps must be >= 0");
  if (replicates < 1) throw validation_error("replicates", "replicates must be >= 1");
  if (bins < 1) throw validation_error("bins", "bins must be >= 1");
  check_checkpoints(checkpoints, n_steps);
}

}  // namespace

MomentAccumulator merge(const MomentAccumulator& a, const MomentAccumulator& b) noexcept {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  MomentAccumulator out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  const double nb_over_n = static_cast<double>(b.count) / static_cast<double>(out.count);
  out.mean = a.mean + delta * nb_over_n;
  out.m2 = a.m2 + b.m2 + delta * delta * static_cast<double>(a.count) * nb_over_n;
  out.min = std::min(a.min, b.min);
  out.max = std::max(a.max, b.max);
  return out;
}

Histogram::Histogram(int bins) {
  if (bins < 1) throw validation_error("bins", "bins must be >= 1, got " + std::to_string(bins));
  counts_.assign(static_cast<std::size_t>(bins), 0);
}

void Histogram::merge_from(const Histogram& other) {
  if (other.counts_.size() != counts_.size())
    throw validation_error("bins", "cannot merge histograms with different bin counts");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

ReplicateSummary run_replicates(const UrnParams& params, std::int64_t n_steps,
                                std::uint64_t replicates, std::uint64_t master_seed,
                                std::span<const std::int64_t> checkpoints, int bins,
                                int workers) {
  validate_mc_args(params, n_steps, replicates, checkpoints, bins);
  const std::uint64_t n_chunks = (replicates + kChunk - 1) / kChunk;
  std::vector<std::vector<CheckpointStats>> chunk_stats(
      n_chunks, make_stats(checkpoints, bins));

  const int n_workers = resolve_workers(workers);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(n_workers)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, replicates);
    fold_replicate_range(params, n_steps, checkpoints, master_seed, begin, end,
                         chunk_stats[c]);
  }
  (void)n_workers;

  auto total = tree_reduce(chunk_stats,
                           [](std::vector<CheckpointStats>& a,
                              const std::vector<CheckpointStats>& b) { merge_into(a, b); });
  return {params, n_steps, replicates, master_seed, std::move(total)};
}

ReplicateSummary run_replicates_serial(const UrnParams& params, std::int64_t n_steps,
                                       std::uint64_t replicates, std::uint64_t master_seed,
                                       std::span<const std::int64_t> checkpoints, int bins) {
  validate_mc_args(params, n_steps, replicates, checkpoints, bins);
  auto stats = make_stats(checkpoints, bins);
  fold_replicate_range(params, n_steps, checkpoints, master_seed, 0, replicates, stats);
  return {params, n_steps, replicates, master_seed, std::move(stats)};
}

std::vector<std::vector<double>> collect_checkpoint_samples(
    const UrnParams& params, std::int64_t n_steps,
    std::span<const std::int64_t> checkpoints, std::uint64_t replicates,
    std::uint64_t master_seed, int workers) {
  validate_mc_args(params, n_steps, replicates, checkpoints, 1);
  std::vector<std::vector<double>> matrix(checkpoints.size(),
                                          std::vector<double>(replicates, 0.0));
  const std::uint64_t n_chunks = (replicates + kChunk - 1) / kChunk;
  const int n_workers = resolve_workers(workers);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(n_workers)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, replicates);
    for (std::uint64_t r = begin; r < end; ++r) {
      RngStream rng(master_seed, r);
      walk_replicate(params, n_steps, checkpoints, rng,
                     [&](std::size_t ck, const UrnState& state) {
                       matrix[ck][r] = proportion(state);
                     });
    }
  }
  (void)n_workers;
  return matrix;
}

std::vector<StateCounts> state_frequencies(const UrnParams& params,
                                           std::span<const std::int64_t> checkpoints,
                                           std::uint64_t replicates,
                                           std::uint64_t master_seed, int workers,
                                           double colour_bias) {
  const std::int64_t n_steps = checkpoints.empty() ? 0 : checkpoints.back();
  validate_mc_args(params, n_steps, replicates, checkpoints, 1);

  using StateMap = std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t>;
  const std::uint64_t n_chunks = (replicates + kChunk - 1) / kChunk;
  std::vector<std::vector<StateMap>> chunk_maps(n_chunks,
                                                std::vector<StateMap>(checkpoints.size()));

  const int n_workers = resolve_workers(workers);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(n_workers)
#endif
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, replicates);
    auto& maps = chunk_maps[c];
    for (std::uint64_t r = begin; r < end; ++r) {
      RngStream rng(master_seed, r);
      if (colour_bias == 0.0) {
        walk_replicate(params, n_steps, checkpoints, rng,
                       [&](std::size_t ck, const UrnState& state) {
                         ++maps[ck][{state.y, state.b}];
                       });
      } else {
        // fault-injection path: identical draw protocol, shifted threshold
        UrnState state{params.y0, params.b0, 0};
        std::size_t ck = 0;
        while (ck < checkpoints.size() && checkpoints[ck] == 0)
          ++maps[ck++][{state.y, state.b}];
        for (std::int64_t t = 1; t <= n_steps; ++t) {
          const double u1 = rng.uniform();
          const double u2 = rng.uniform();
          const bool friedman = u1 < params.p;
          const bool yellow = u2 < std::clamp(proportion(state) + colour_bias, 0.0, 1.0);
          if (friedman) {
            state.y += yellow ? params.alpha : params.beta;
            state.b += yellow ? params.beta : params.alpha;
          } else {
            (yellow ? state.y : state.b) += params.gamma;
          }
          ++state.n;
          while (ck < checkpoints.size() && checkpoints[ck] == t)
            ++maps[ck++][{state.y, state.b}];
        }
      }
    }
  }
  (void)n_workers;

  std::vector<StateCounts> out;
  out.reserve(checkpoints.size());
  for (std::size_t ck = 0; ck < checkpoints.size(); ++ck) {
    StateMap total;
    for (const auto& maps : chunk_maps)
      for (const auto& [state, count] : maps[ck]) total[state] += count;
    StateCounts sc;
    sc.n = checkpoints[ck];
    sc.counts.assign(total.begin(), total.end());
    out.push_back(std::move(sc));
  }
  return out;
}

ConvergenceCurve convergence_curve(const UrnParams& params, std::int64_t n_max,
                                   std::uint64_t replicates, std::uint64_t master_seed,
                                   int workers) {
  params.validate();
  if (n_max < 1) throw validation_error("n_max", "n_max must be >= 1");
  std::vector<std::int64_t> checkpoints;
  for (std::int64_t n = 1; n <= n_max && n > 0; n *= 2) checkpoints.push_back(n);
  if (checkpoints.back() != n_max) checkpoints.push_back(n_max);

  const auto matrix =
      collect_checkpoint_samples(params, n_max, checkpoints, replicates, master_seed, workers);

  ConvergenceCurve curve;
  if (!params.within_theorem())
    curve.warning = "parameters lie outside the convergence theorem's regime "
                    "(requires alpha, beta, gamma >= 1 and p > 0)";
  curve.points.reserve(checkpoints.size());
  for (std::size_t ck = 0; ck < checkpoints.size(); ++ck) {
    MomentAccumulator acc;
    std::vector<double> abs_dev(replicates);
    for (std::uint64_t r = 0; r < replicates; ++r) {
      acc.add(matrix[ck][r]);
      abs_dev[r] = std::abs(matrix[ck][r] - 0.5);
    }
    std::sort(abs_dev.begin(), abs_dev.end());
    // smallest value covering at least 90% of replicates
    const auto idx = static_cast<std::size_t>(
        std::ceil(0.9 * static_cast<double>(replicates))) - 1;
    curve.points.push_back({checkpoints[ck], acc.mean,
                            acc.count >= 2 ? acc.variance()
                                           : std::numeric_limits<double>::quiet_NaN(),
                            abs_dev[idx]});
  }
  return curve;
}

}  // namespace urn
