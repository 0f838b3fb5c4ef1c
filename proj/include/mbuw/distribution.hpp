#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mbuw {

// Shape pair of the median based unit Weibull law. Every density, moment and
// quantile depends on the pair only through theta = alpha^beta.
class Params {
 public:
  Params(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double theta() const { return theta_; }

  // Any pair with alpha^beta == theta; alpha = theta, beta = 1.
  static Params from_theta(double theta);

 private:
  double alpha_;
  double beta_;
  double theta_;
};

// Observations strictly inside (0, 1), sorted ascending.
class Sample {
 public:
  explicit Sample(std::vector<double> values, std::string source = {});

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::string& source() const { return source_; }
  double mean() const;

 private:
  std::vector<double> values_;
  std::string source_;
};

struct DescriptiveStats {
  double min = 0.0;
  double mean = 0.0;
  double stdev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// (6/theta) (1 - y^(1/theta)) y^(2/theta - 1). The endpoints take the
// continuous limit; y = 0 throws when the density diverges there (theta > 2).
double pdf(double y, const Params& p);

// 3t^2 - 2t^3 with t = y^(1/theta).
double cdf(double y, const Params& p);

// Trigonometric root of the cubic 3t^2 - 2t^3 = u, raised to theta.
double quantile(double u, const Params& p);

// 0.5^theta.
double median(const Params& p);

// n inverse-transform draws; identical output for identical seeds.
Sample sample(std::size_t n, const Params& p, std::uint64_t seed);

// Uniform variate in (0, 1) from a 64-bit generator word.
double unit_open(std::uint64_t word);

// Table-style summary: n-1 standard deviation, bias-adjusted skewness (G1),
// bias-adjusted kurtosis (G2 + 3), Hazen quartiles at n*p + 1/2.
DescriptiveStats describe(const Sample& s);

// Hazen plotting-position quantile of sorted data, p in [0, 1].
double hazen_quantile(std::span<const double> sorted, double p);

}  // namespace mbuw
