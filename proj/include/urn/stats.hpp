#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace urn {

// Empirical CDF over a sorted copy of the samples.
class Ecdf {
 public:
  explicit Ecdf(std::vector<double> samples);  // sorts; throws on empty input

  const std::vector<double>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

  // Right-continuous staircase: fraction of samples <= x.
  double operator()(double x) const noexcept;

 private:
  std::vector<double> samples_;
};

// Regularized incomplete beta I_x(a, b), the Beta(a, b) CDF. Continued
// fraction with the tail switch I_x(a,b) = 1 - I_{1-x}(b,a) above the
// region boundary x = a/(a+b). Accurate to ~1e-10 for a, b <= 100.
double beta_cdf(double a, double b, double x);

// D_n = max_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|) over sorted samples;
// the exact sup distance between the ECDF and F when F is continuous.
double ks_statistic(const Ecdf& samples, const std::function<double(double)>& cdf);

}  // namespace urn
