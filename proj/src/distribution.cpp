#include "mbuw/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mbuw {

Params::Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::domain_error("MBUW parameters must be finite and positive");
  theta_ = std::pow(alpha, beta);
  if (!(theta_ > 0.0) || !std::isfinite(theta_))
    throw std::domain_error("alpha^beta must be finite and positive");
}

Params Params::from_theta(double theta) { return Params(theta, 1.0); }

Sample::Sample(std::vector<double> values, std::string source)
    : values_(std::move(values)), source_(std::move(source)) {
  if (values_.empty()) throw std::invalid_argument("sample is empty");
  for (double v : values_) {
    if (!(v > 0.0 && v < 1.0)) {
      std::ostringstream os;
      os << "sample value " << v << " is outside the open unit interval";
      throw std::domain_error(os.str());
    }
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double pdf(double y, const Params& p) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("pdf argument outside [0, 1]");
  const double theta = p.theta();
  if (y == 1.0) return 0.0;
  if (y == 0.0) {
    const double e = 2.0 / theta - 1.0;
    if (e > 0.0) return 0.0;
    if (e == 0.0) return 6.0 / theta;
    throw std::domain_error("pdf diverges at y = 0 for theta > 2");
  }
  const double t = std::pow(y, 1.0 / theta);
  return (6.0 / theta) * (1.0 - t) * std::pow(y, 2.0 / theta - 1.0);
}

double cdf(double y, const Params& p) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("cdf argument outside [0, 1]");
  const double t = std::pow(y, 1.0 / p.theta());
  return t * t * (3.0 - 2.0 * t);
}

namespace {

// Root in [0, 1] of 3t^2 - 2t^3 = u for u <= 1/2. Same root as the textbook
// -0.5 (cos(a/3) - sqrt(3) sin(a/3)) + 0.5 with a = acos(1 - 2u), rewritten with
// acos(1 - 2u) = 2 asin(sqrt(u)) and a product-to-sum identity so it keeps full
// relative precision as u -> 0.
double cubic_root_lower(double u) {
  const double phi = 2.0 * std::asin(std::sqrt(u)) / 3.0;
  return 2.0 * std::sin(std::numbers::pi / 3.0 + 0.5 * phi) * std::sin(0.5 * phi);
}

}  // namespace

double quantile(double u, const Params& p) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile argument outside [0, 1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // the cubic is symmetric: t(1 - u) = 1 - t(u)
  const double t = u <= 0.5 ? cubic_root_lower(u) : 1.0 - cubic_root_lower(1.0 - u);
  return std::pow(std::clamp(t, 0.0, 1.0), p.theta());
}

double median(const Params& p) { return std::pow(0.5, p.theta()); }

double unit_open(std::uint64_t word) {
  return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

Sample sample(std::size_t n, const Params& p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (auto& v : out) {
    v = quantile(unit_open(gen()), p);
    // pow can round extreme draws onto the boundary
    v = std::clamp(v, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
  }
  return Sample(std::move(out), "simulated");
}

double hazen_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const auto n = static_cast<double>(sorted.size());
  const double h = std::clamp(n * p + 0.5, 1.0, n);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo >= sorted.size()) return sorted.back();
  return sorted[lo - 1] + (h - static_cast<double>(lo)) * (sorted[lo] - sorted[lo - 1]);
}

DescriptiveStats describe(const Sample& s) {
  const std::size_t size = s.size();
  if (size < 4) throw std::invalid_argument("descriptive statistics need at least 4 observations");
  const auto y = s.values();
  const auto n = static_cast<double>(size);

  DescriptiveStats d;
  d.min = y.front();
  d.max = y.back();
  d.mean = s.mean();

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : y) {
    const double c = v - d.mean;
    m2 += c * c;
    m3 += c * c * c;
    m4 += c * c * c * c;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (d.min == d.max) throw std::domain_error("skewness and kurtosis undefined for zero variance");

  d.stdev = std::sqrt(m2 * n / (n - 1.0));
  const double g1 = m3 / std::pow(m2, 1.5);
  const double g2 = m4 / (m2 * m2) - 3.0;
  d.skewness = g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
  d.kurtosis = ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0)) + 3.0;

  d.q1 = hazen_quantile(y, 0.25);
  d.median = hazen_quantile(y, 0.5);
  d.q3 = hazen_quantile(y, 0.75);
  return d;
}

}  // namespace mbuw
