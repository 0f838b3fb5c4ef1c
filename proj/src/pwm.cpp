#include "mbuw/pwm.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace mbuw {

namespace {

void require_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::domain_error("theta must be finite and positive");
}

struct Fraction {
  double numerator;
  double shift;
};

double fractions_derivative(std::span<const Fraction> terms, double theta) {
  double sum = 0.0;
  for (const auto& f : terms) sum -= f.numerator / ((f.shift + theta) * (f.shift + theta));
  return sum;
}

constexpr Fraction kM110[] = {{18, 4}, {-30, 5}, {12, 6}};
constexpr Fraction kM101[] = {{6, 2}, {-6, 3}, {-18, 4}, {30, 5}, {-12, 6}};
constexpr Fraction kM120[] = {{54, 6}, {-126, 7}, {96, 8}, {-24, 9}};
constexpr Fraction kM102[] = {{6, 2},   {-6, 3},   {-36, 4}, {60, 5},
                                                   {30, 6},  {-126, 7}, {96, 8},  {-24, 9}};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("PWM expansion coefficient overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("PWM expansion coefficient overflow");
  return out;
}

using Poly = std::vector<std::int64_t>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

Poly power(const Poly& base, unsigned e) {
  Poly out{1};
  for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (unsigned i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return out;
}

}  // namespace

void MomentSpec::validate() const {
  if (order != 1 && order != 2) throw std::invalid_argument("PWM order must be 1 or 2");
  if (estimator == Estimator::biased) {
    const bool ok = plotting_form == PlottingForm::i_minus_b_over_n ? (plotting_b >= 0.0 && plotting_b <= 1.0)
                                                                     : (plotting_b >= -0.5 && plotting_b <= 0.5);
    if (!ok) throw std::out_of_range("plotting-position parameter b outside the range of its form");
  }
}

std::string_view to_string(Estimator e) { return e == Estimator::unbiased ? "unbiased" : "biased"; }

std::string_view to_string(PlottingForm f) {
  return f == PlottingForm::i_minus_b_over_n ? "i_minus_b_over_n" : "i_minus_b_over_n_plus_1_minus_2b";
}

Estimator parse_estimator(std::string_view s) {
  if (s == "unbiased") return Estimator::unbiased;
  if (s == "biased") return Estimator::biased;
  throw std::invalid_argument("unknown estimator '" + std::string(s) + "'");
}

PlottingForm parse_plotting_form(std::string_view s) {
  if (s == "i_minus_b_over_n") return PlottingForm::i_minus_b_over_n;
  if (s == "i_minus_b_over_n_plus_1_minus_2b") return PlottingForm::i_minus_b_over_n_plus_1_minus_2b;
  throw std::invalid_argument("unknown plotting form '" + std::string(s) + "'");
}

double pop_mean(double theta) {
  require_theta(theta);
  return 6.0 / ((2.0 + theta) * (3.0 + theta));
}

double pop_m101(double theta) {
  require_theta(theta);
  const double den = (2.0 + theta) * (3.0 + theta) * (4.0 + theta) * (5.0 + theta) * (6.0 + theta);
  return (360.0 + 108.0 * theta) / den;
}

double pop_m110(double theta) {
  require_theta(theta);
  return 6.0 * (10.0 + theta) / ((4.0 + theta) * (5.0 + theta) * (6.0 + theta));
}

double pop_m120(double theta) {
  require_theta(theta);
  const double den = (6.0 + theta) * (7.0 + theta) * (8.0 + theta) * (9.0 + theta);
  return (1008.0 + 150.0 * theta + 6.0 * theta * theta) / den;
}

double pop_m102(double theta) {
  require_theta(theta);
  const double left = 1.0 / (2.0 + theta) - 6.0 / (4.0 + theta) + 4.0 / (5.0 + theta) + 9.0 / (6.0 + theta) -
                      12.0 / (7.0 + theta) + 4.0 / (8.0 + theta);
  const double right = 1.0 / (3.0 + theta) - 6.0 / (5.0 + theta) + 4.0 / (6.0 + theta) + 9.0 / (7.0 + theta) -
                       12.0 / (8.0 + theta) + 4.0 / (9.0 + theta);
  return 6.0 * left - 6.0 * right;
}

double pop_m101_derivative(double theta) {
  require_theta(theta);
  return fractions_derivative(kM101, theta);
}

double pop_m110_derivative(double theta) {
  require_theta(theta);
  return fractions_derivative(kM110, theta);
}

double pop_m102_derivative(double theta) {
  require_theta(theta);
  return fractions_derivative(kM102, theta);
}

double pop_m120_derivative(double theta) {
  require_theta(theta);
  return fractions_derivative(kM120, theta);
}

PwmPair population_pair(int order, double theta) {
  if (order == 1) return {pop_m101(theta), pop_m110(theta), 1};
  if (order == 2) return {pop_m102(theta), pop_m120(theta), 2};
  throw std::invalid_argument("PWM order must be 1 or 2");
}

PwmPair population_pair_derivative(int order, double theta) {
  if (order == 1) return {pop_m101_derivative(theta), pop_m110_derivative(theta), 1};
  if (order == 2) return {pop_m102_derivative(theta), pop_m120_derivative(theta), 2};
  throw std::invalid_argument("PWM order must be 1 or 2");
}

PwmExpansion::PwmExpansion(unsigned r, unsigned s) {
  if (r != 0 && s != 0) throw std::invalid_argument("only one-sided PWMs (r * s == 0) are supported");
  const Poly cdf_poly{0, 0, 3, -2};
  const Poly survival_poly{1, 0, -3, 2};
  const Poly density_poly{0, 6, -6};
  coeffs_ = multiply(density_poly, multiply(power(cdf_poly, r), power(survival_poly, s)));
}

double PwmExpansion::value(double theta) const {
  require_theta(theta);
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) sum += static_cast<double>(coeffs_[k]) / (theta + static_cast<double>(k) + 1.0);
  return sum;
}

double PwmExpansion::derivative(double theta) const {
  require_theta(theta);
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double d = theta + static_cast<double>(k) + 1.0;
    sum -= static_cast<double>(coeffs_[k]) / (d * d);
  }
  return sum;
}

double pop_pwm_general(unsigned r, unsigned s, double theta) { return PwmExpansion(r, s).value(theta); }

double sample_pwm_unbiased(const Sample& s, unsigned r, unsigned k) {
  if (r != 0 && k != 0) throw std::invalid_argument("only one of r, k may be nonzero");
  const std::size_t n = s.size();
  if (n <= std::max(r, k)) throw std::invalid_argument("sample too small for the requested PWM order");
  const auto nu = static_cast<unsigned>(n);
  const double norm_r = binomial(nu - 1, r);
  const double norm_k = binomial(nu - 1, k);
  double sum = 0.0;
  for (unsigned i = 1; i <= nu; ++i) {
    const double w = binomial(i - 1, r) / norm_r * binomial(nu - i, k) / norm_k;
    sum += w * s[i - 1];
  }
  return sum / static_cast<double>(n);
}

double sample_pwm_biased(const Sample& s, unsigned r, unsigned k, const MomentSpec& spec) {
  if (r != 0 && k != 0) throw std::invalid_argument("only one of r, k may be nonzero");
  MomentSpec checked = spec;
  checked.estimator = Estimator::biased;
  checked.validate();
  const auto n = static_cast<double>(s.size());
  const double b = spec.plotting_b;
  const double denom = spec.plotting_form == PlottingForm::i_minus_b_over_n ? n : n + 1.0 - 2.0 * b;
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double p = (static_cast<double>(i + 1) - b) / denom;
    sum += s[i] * std::pow(p, r) * std::pow(1.0 - p, k);
  }
  return sum / n;
}

PwmPair sample_pair(const Sample& s, const MomentSpec& spec) {
  spec.validate();
  const auto order = static_cast<unsigned>(spec.order);
  if (spec.estimator == Estimator::unbiased)
    return {sample_pwm_unbiased(s, 0, order), sample_pwm_unbiased(s, order, 0), spec.order};
  return {sample_pwm_biased(s, 0, order, spec), sample_pwm_biased(s, order, 0, spec), spec.order};
}

std::vector<double> convert_pwm(std::span<const double> family) {
  if (family.empty()) throw std::invalid_argument("empty PWM family");
  std::vector<double> out(family.size(), 0.0);
  for (unsigned s = 0; s < family.size(); ++s) {
    double sum = 0.0;
    for (unsigned i = 0; i <= s; ++i) sum += ((i % 2 == 0) ? 1.0 : -1.0) * binomial(s, i) * family[i];
    out[s] = sum;
  }
  return out;
}

}  // namespace mbuw
