#pragma once

#include <cstdint>
#include <vector>

#include "urn/params.hpp"
#include "urn/rational.hpp"

namespace urn {

template <class P>
struct StateMass {
  std::int64_t y;
  std::int64_t b;
  P prob;
};

// Exact law of (Y_n, B_n): finite support sorted by (y, b).
template <class P>
struct BasicExactDistribution {
  std::int64_t n = 0;
  std::vector<StateMass<P>> support;
};

using ExactDistribution = BasicExactDistribution<double>;
using ExactDistributionQ = BasicExactDistribution<Rational>;

// Level-by-level push-forward of the point mass at (y0, b0) through the
// transition kernel. Throws frontier_limit_error when a level's support
// exceeds frontier_limit states.
ExactDistribution exact_distribution(const UrnParams& params, std::int64_t n,
                                     std::size_t frontier_limit = 5000);

// Same DP in exact rational arithmetic; probabilities sum to exactly 1.
ExactDistributionQ exact_distribution_rational(const UrnParams& params, std::int64_t n,
                                               std::size_t frontier_limit = 5000);

// One atom of the law of X_n = y/(y+b); x = num/den in lowest terms.
template <class P>
struct XMass {
  std::int64_t num;
  std::int64_t den;
  P prob;
};

// Projects the state law onto X_n, merging states with equal proportion.
// Sorted by x ascending.
std::vector<XMass<double>> x_law(const ExactDistribution& dist);
std::vector<XMass<Rational>> x_law(const ExactDistributionQ& dist);

// k-th raw moment of X_n, k >= 1.
double moment(const ExactDistribution& dist, int k);
Rational moment(const ExactDistributionQ& dist, int k);

}  // namespace urn
