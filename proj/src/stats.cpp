#include "urn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace urn {

Ecdf::Ecdf(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("Ecdf requires at least one sample");
  std::sort(samples_.begin(), samples_.end());
}

double Ecdf::operator()(double x) const noexcept {
  const auto upper = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(upper - samples_.begin()) / static_cast<double>(samples_.size());
}

namespace {

// Continued fraction for I_x(a, b), evaluated with the modified Lentz
// scheme. Converges quickly for x below the distribution's bulk.
double beta_cont_fraction(double a, double b, double x) {
  constexpr double eps = 3e-16;
  constexpr double tiny = 1e-300;
  constexpr int max_iters = 1000;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iters; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw std::runtime_error("beta_cdf: continued fraction failed to converge");
}

double beta_cdf_direct(double a, double b, double x) {
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  return std::exp(log_front) * beta_cont_fraction(a, b, x) / a;
}

}  // namespace

double beta_cdf(double a, double b, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("beta_cdf: a must be > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("beta_cdf: b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("beta_cdf: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  if (x <= a / (a + b)) return beta_cdf_direct(a, b, x);
  return 1.0 - beta_cdf_direct(b, a, 1.0 - x);
}

double ks_statistic(const Ecdf& samples, const std::function<double(double)>& cdf) {
  const auto& xs = samples.samples();
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    const double above = std::abs(static_cast<double>(i + 1) / n - f);
    const double below = std::abs(static_cast<double>(i) / n - f);
    worst = std::max({worst, above, below});
  }
  return worst;
}

}  // namespace urn
