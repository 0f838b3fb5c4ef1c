#include "mbuw/gof.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbuw {

namespace {

std::vector<double> fitted_values(const Sample& s, const CdfFn& cdf) {
  std::vector<double> F(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) F[i] = cdf(s[i]);
  return F;
}

}  // namespace

std::string_view to_string(Decision d) { return d == Decision::reject ? "reject" : "fail_to_reject"; }

std::string_view to_string(KsPvalueMethod m) { return m == KsPvalueMethod::stephens ? "stephens" : "asymptotic"; }

KsPvalueMethod parse_ks_method(std::string_view s) {
  if (s == "stephens") return KsPvalueMethod::stephens;
  if (s == "asymptotic") return KsPvalueMethod::asymptotic;
  throw std::invalid_argument("unknown KS p-value method '" + std::string(s) + "'");
}

double ks_statistic(const Sample& s, const CdfFn& cdf) {
  const auto n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double F = cdf(s[i]);
    const double hi = static_cast<double>(i + 1) / n - F;
    const double lo = F - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  return d;
}

double kolmogorov_tail(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  constexpr double pi = std::numbers::pi;
  if (lambda < 1.18) {
    // Jacobi-transformed series converges fast for small lambda.
    const double lead = std::sqrt(2.0 * pi) / lambda;
    double sum = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double m = 2.0 * k - 1.0;
      const double term = std::exp(-m * m * pi * pi / (8.0 * lambda * lambda));
      sum += term;
      if (term < 1e-17) break;
    }
    return std::clamp(1.0 - lead * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_pvalue(double d, std::size_t n, KsPvalueMethod method) {
  if (!(d >= 0.0 && d <= 1.0)) throw std::domain_error("KS statistic outside [0, 1]");
  if (n == 0) throw std::invalid_argument("KS p-value needs n >= 1");
  const double root = std::sqrt(static_cast<double>(n));
  const double scale = method == KsPvalueMethod::stephens ? root + 0.12 + 0.11 / root : root;
  return kolmogorov_tail(scale * d);
}

double ad_statistic(const Sample& s, const CdfFn& cdf) {
  const auto F = fitted_values(s, cdf);
  const std::size_t size = F.size();
  for (double f : F)
    if (!(f > 0.0 && f < 1.0)) throw std::domain_error("Anderson-Darling needs fitted CDF values strictly inside (0, 1)");
  const auto n = static_cast<double>(size);
  double sum = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double w = 2.0 * static_cast<double>(i + 1) - 1.0;
    sum += w * (std::log(F[i]) + std::log1p(-F[size - 1 - i]));
  }
  return -n - sum / n;
}

double cvm_statistic(const Sample& s, const CdfFn& cdf) {
  const auto F = fitted_values(s, cdf);
  const auto n = static_cast<double>(F.size());
  double sum = 1.0 / (12.0 * n);
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double c = F[i] - (2.0 * static_cast<double>(i + 1) - 1.0) / (2.0 * n);
    sum += c * c;
  }
  return sum;
}

Decision decide(double p, double level) {
  if (!(p >= 0.0 && p <= 1.0) || !(level >= 0.0 && level <= 1.0))
    throw std::domain_error("p-value and level must lie in [0, 1]");
  return p < level ? Decision::reject : Decision::fail_to_reject;
}

GofReport assess(const Sample& s, const Params& p, double level, KsPvalueMethod method) {
  const CdfFn F = [&p](double y) { return cdf(y, p); };
  GofReport g;
  g.level = level;
  g.ks = ks_statistic(s, F);
  g.ks_pvalue = ks_pvalue(g.ks, s.size(), method);
  g.ad = ad_statistic(s, F);
  g.cvm = cvm_statistic(s, F);
  g.decision = decide(g.ks_pvalue, level);
  return g;
}

}  // namespace mbuw
