#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mbuw/distribution.hpp"

namespace mbuw {

enum class Estimator { unbiased, biased };

enum class PlottingForm {
  i_minus_b_over_n,                // (i - b) / n, 0 <= b <= 1
  i_minus_b_over_n_plus_1_minus_2b  // (i - b) / (n + 1 - 2b), -0.5 <= b <= 0.5
};

// Which PWM pair is matched and how the sample side is estimated.
// order 1 pairs M(1,0,1) with M(1,1,0); order 2 pairs M(1,0,2) with M(1,2,0).
struct MomentSpec {
  int order = 1;
  Estimator estimator = Estimator::unbiased;
  double plotting_b = 0.35;
  PlottingForm plotting_form = PlottingForm::i_minus_b_over_n;

  void validate() const;
};

// a is the M(1,0,s) side, b the M(1,s,0) side, s = order.
struct PwmPair {
  double a = 0.0;
  double b = 0.0;
  int order = 1;
};

std::string_view to_string(Estimator e);
std::string_view to_string(PlottingForm f);
Estimator parse_estimator(std::string_view s);
PlottingForm parse_plotting_form(std::string_view s);

// Population moments in closed form. All throw std::domain_error for theta <= 0.
double pop_mean(double theta);
double pop_m101(double theta);
double pop_m110(double theta);
double pop_m102(double theta);
double pop_m120(double theta);

// d/dtheta of the four closed forms, from their partial-fraction expansions.
double pop_m101_derivative(double theta);
double pop_m110_derivative(double theta);
double pop_m102_derivative(double theta);
double pop_m120_derivative(double theta);

// Pair matched at the given order, and its theta-derivative.
PwmPair population_pair(int order, double theta);
PwmPair population_pair_derivative(int order, double theta);

// M(1,r,s) = sum_k c[k] / (theta + k + 1), where c holds the exact integer
// coefficients of 6 t (1 - t) F^r (1 - F)^s with F = 3t^2 - 2t^3.
// Requires r * s == 0. Throws std::overflow_error if a coefficient leaves int64.
class PwmExpansion {
 public:
  PwmExpansion(unsigned r, unsigned s);

  double value(double theta) const;
  double derivative(double theta) const;
  std::span<const std::int64_t> coefficients() const { return coeffs_; }

 private:
  std::vector<std::int64_t> coeffs_;
};

double pop_pwm_general(unsigned r, unsigned s, double theta);

// Unbiased order-statistic estimators. With r == 0 this is the a_k estimator
// of M(1,0,k); with k == 0 the b_r estimator of M(1,r,0). Needs n > max(r, k).
double sample_pwm_unbiased(const Sample& s, unsigned r, unsigned k);

// Plotting-position estimator (1/n) sum y_i p_i^r (1 - p_i)^k.
double sample_pwm_biased(const Sample& s, unsigned r, unsigned k, const MomentSpec& spec);

// Sample pair for spec.order using spec.estimator.
PwmPair sample_pair(const Sample& s, const MomentSpec& spec);

// Binomial transform between the M(1,0,s) family and the M(1,r,0) family:
// out[s] = sum_i (-1)^i C(s, i) in[i]. The transform is its own inverse, so
// the same routine maps either family to the other.
std::vector<double> convert_pwm(std::span<const double> family);

}  // namespace mbuw
