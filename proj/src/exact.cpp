#include "urn/exact.hpp"

#include <algorithm>
#include <numeric>

#include "urn/errors.hpp"
#include "urn/model.hpp"

namespace urn {

namespace {

template <class P>
using Level = std::vector<StateMass<P>>;

template <class P>
void sort_and_merge(Level<P>& level) {
  std::sort(level.begin(), level.end(), [](const StateMass<P>& lhs, const StateMass<P>& rhs) {
    return std::pair(lhs.y, lhs.b) < std::pair(rhs.y, rhs.b);
  });
  std::size_t merged = 0;
  for (std::size_t i = 1; i < level.size(); ++i) {
    if (level[i].y == level[merged].y && level[i].b == level[merged].b) {
      level[merged].prob += level[i].prob;
    } else {
      level[++merged] = std::move(level[i]);
    }
  }
  level.resize(level.empty() ? 0 : merged + 1);
}

// Push one level through the kernel. The double backend routes through
// transition_kernel itself; the rational backend mirrors the four branches
// in exact arithmetic so the two modes stay independent computations.
Level<double> advance(const Level<double>& cur, const UrnParams& params) {
  Level<double> next;
  next.reserve(cur.size() * 4);
  for (const auto& mass : cur) {
    for (const auto& branch : transition_kernel({mass.y, mass.b, 0}, params))
      next.push_back({branch.next.y, branch.next.b, mass.prob * branch.prob});
  }
  sort_and_merge(next);
  return next;
}

Level<Rational> advance(const Level<Rational>& cur, const UrnParams& params) {
  const Rational p = exact_p(params);
  const Rational q = 1 - p;
  Level<Rational> next;
  next.reserve(cur.size() * 4);
  for (const auto& mass : cur) {
    const Rational x(mass.y, mass.y + mass.b);
    const Rational cx = 1 - x;
    const auto push = [&](std::int64_t y, std::int64_t b, const Rational& prob) {
      if (prob != 0) next.push_back({y, b, mass.prob * prob});
    };
    push(mass.y + params.alpha, mass.b + params.beta, p * x);
    push(mass.y + params.beta, mass.b + params.alpha, p * cx);
    push(mass.y + params.gamma, mass.b, q * x);
    push(mass.y, mass.b + params.gamma, q * cx);
  }
  sort_and_merge(next);
  return next;
}

template <class P>
BasicExactDistribution<P> run_dp(const UrnParams& params, std::int64_t n,
                                 std::size_t frontier_limit) {
  params.validate();
  if (n < 0) throw validation_error("n", "n must be >= 0, got " + std::to_string(n));
  Level<P> cur{{params.y0, params.b0, P(1)}};
  for (std::int64_t level = 1; level <= n; ++level) {
    cur = advance(cur, params);
    if (cur.size() > frontier_limit)
      throw frontier_limit_error(level, cur.size(), frontier_limit);
  }
  return {n, std::move(cur)};
}

template <class P>
std::vector<XMass<P>> project_x(const BasicExactDistribution<P>& dist) {
  std::vector<XMass<P>> atoms;
  atoms.reserve(dist.support.size());
  for (const auto& mass : dist.support) {
    const std::int64_t g = std::gcd(mass.y, mass.y + mass.b);
    atoms.push_back({mass.y / g, (mass.y + mass.b) / g, mass.prob});
  }
  const auto less = [](const XMass<P>& lhs, const XMass<P>& rhs) {
    return static_cast<__int128>(lhs.num) * rhs.den < static_cast<__int128>(rhs.num) * lhs.den;
  };
  std::sort(atoms.begin(), atoms.end(), less);
  std::size_t merged = 0;
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].num == atoms[merged].num && atoms[i].den == atoms[merged].den) {
      atoms[merged].prob += atoms[i].prob;
    } else {
      atoms[++merged] = std::move(atoms[i]);
    }
  }
  atoms.resize(atoms.empty() ? 0 : merged + 1);
  return atoms;
}

}  // namespace

ExactDistribution exact_distribution(const UrnParams& params, std::int64_t n,
                                     std::size_t frontier_limit) {
  return run_dp<double>(params, n, frontier_limit);
}

ExactDistributionQ exact_distribution_rational(const UrnParams& params, std::int64_t n,
                                               std::size_t frontier_limit) {
  return run_dp<Rational>(params, n, frontier_limit);
}

std::vector<XMass<double>> x_law(const ExactDistribution& dist) { return project_x(dist); }

std::vector<XMass<Rational>> x_law(const ExactDistributionQ& dist) { return project_x(dist); }

double moment(const ExactDistribution& dist, int k) {
  if (k < 1) throw validation_error("k", "moment order must be >= 1");
  double sum = 0.0;
  for (const auto& mass : dist.support) {
    const double x = static_cast<double>(mass.y) / static_cast<double>(mass.y + mass.b);
    double xk = x;
    for (int i = 1; i < k; ++i) xk *= x;
    sum += mass.prob * xk;
  }
  return sum;
}

Rational moment(const ExactDistributionQ& dist, int k) {
  if (k < 1) throw validation_error("k", "moment order must be >= 1");
  Rational sum = 0;
  for (const auto& mass : dist.support) {
    const Rational x(mass.y, mass.y + mass.b);
    Rational xk = x;
    for (int i = 1; i < k; ++i) xk *= x;
    sum += mass.prob * xk;
  }
  return sum;
}

}  // namespace urn
