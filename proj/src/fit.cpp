#include "mbuw/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mbuw {

namespace {

// Products (k + theta) over the denominators of the closed forms.
struct Denominator {
  int first;
  int last;

  double value(double theta) const {
    double out = 1.0;
    for (int k = first; k <= last; ++k) out *= k + theta;
    return out;
  }
  double log_derivative(double theta) const {
    double out = 0.0;
    for (int k = first; k <= last; ++k) out += 1.0 / (k + theta);
    return out;
  }
};

std::pair<Denominator, Denominator> denominators(int order) {
  if (order == 1) return {{2, 6}, {4, 6}};
  if (order == 2) return {{2, 9}, {6, 9}};
  throw std::invalid_argument("PWM order must be 1 or 2");
}

// d residual / d theta for both residuals.
Eigen::Vector2d residual_theta_derivative(double theta, const PwmPair& targets, int order, ResidualForm form) {
  const PwmPair dm = population_pair_derivative(order, theta);
  if (form == ResidualForm::normalized) return {-dm.a, -dm.b};
  const PwmPair m = population_pair(order, theta);
  const auto [da, db] = denominators(order);
  const double va = da.value(theta);
  const double vb = db.value(theta);
  return {va * da.log_derivative(theta) * (targets.a - m.a) - va * dm.a,
          vb * db.log_derivative(theta) * (targets.b - m.b) - vb * dm.b};
}

void require_targets(const PwmPair& targets) {
  if (!(targets.a > 0.0 && targets.a < 1.0) || !(targets.b > 0.0 && targets.b < 1.0))
    throw std::domain_error("PWM targets must lie in (0, 1)");
}

}  // namespace

std::string_view to_string(ResidualForm f) { return f == ResidualForm::normalized ? "normalized" : "cleared"; }

ResidualForm parse_residual_form(std::string_view s) {
  if (s == "normalized") return ResidualForm::normalized;
  if (s == "cleared") return ResidualForm::cleared;
  throw std::invalid_argument("unknown residual form '" + std::string(s) + "'");
}

Eigen::Vector2d residuals(const Params& p, const PwmPair& targets, int order, ResidualForm form) {
  require_targets(targets);
  const double theta = p.theta();
  const PwmPair m = population_pair(order, theta);
  Eigen::Vector2d r(targets.a - m.a, targets.b - m.b);
  if (form == ResidualForm::cleared) {
    const auto [da, db] = denominators(order);
    r[0] *= da.value(theta);
    r[1] *= db.value(theta);
  }
  return r;
}

Eigen::Vector2d theta_gradient(const Params& p) {
  const double a = p.alpha();
  const double b = p.beta();
  return {b * std::pow(a, b - 1.0), p.theta() * std::log(a)};
}

Eigen::Matrix2d jacobian(const Params& p, const PwmPair& targets, int order, ResidualForm form) {
  const Eigen::Vector2d dr = residual_theta_derivative(p.theta(), targets, order, form);
  return dr * theta_gradient(p).transpose();
}

Eigen::Matrix2d jacobian(const Params& p, int order) {
  // targets only enter the cleared form
  return jacobian(p, PwmPair{0.5, 0.5, order}, order, ResidualForm::normalized);
}

ThetaVariance theta_variance(const Params& p, const Eigen::Matrix2d& cov, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  const Eigen::Vector2d g = theta_gradient(p);
  ThetaVariance out;
  out.variance = g.dot(cov * g) / static_cast<double>(n);
  out.indefinite = out.variance < 0.0;
  out.se = out.indefinite ? std::nan("") : std::sqrt(out.variance);
  return out;
}

ThetaVariance theta_variance(const FitReport& report) {
  return theta_variance(Params(report.alpha_hat, report.beta_hat), report.covariance, report.n);
}

double normal_two_sided_p(double estimate, double se) {
  if (estimate == 0.0) return 1.0;
  if (!(se > 0.0)) return 0.0;
  return std::erfc(std::abs(estimate / se) / std::sqrt(2.0));
}

std::pair<double, double> significance(const FitReport& report) {
  return {normal_two_sided_p(report.alpha_hat, report.se_alpha), normal_two_sided_p(report.beta_hat, report.se_beta)};
}

LmResult fit_targets(const PwmPair& targets, const Params& init, const LmConfig& cfg, ResidualForm form) {
  require_targets(targets);
  const int order = targets.order;
  const ResidualFn res = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return residuals(Params(x[0], x[1]), targets, order, form);
  };
  const JacobianFn jac = [&](const Eigen::VectorXd& x) -> Eigen::MatrixXd {
    return jacobian(Params(x[0], x[1]), targets, order, form);
  };
  return solve(res, jac, Eigen::Vector2d(init.alpha(), init.beta()), cfg);
}

FitReport fit(const Sample& data, const FitOptions& options) {
  const MomentSpec& spec = options.spec;
  spec.validate();
  if (data.size() < static_cast<std::size_t>(spec.order) + 2)
    throw std::invalid_argument("fit needs at least order + 2 observations");

  FitReport report;
  report.n = data.size();
  report.spec = spec;
  report.residual_form = options.residual_form;
  report.sample_pwms = sample_pair(data, spec);
  const PwmPair targets = report.sample_pwms;
  require_targets(targets);

  const Params init(options.init_alpha, options.init_beta);
  report.solver = fit_targets(targets, init, options.lm, options.residual_form);
  const LmResult& lm = report.solver;

  const Params est(lm.params[0], lm.params[1]);
  report.alpha_hat = est.alpha();
  report.beta_hat = est.beta();
  report.theta_hat = est.theta();
  report.covariance = lm.covariance;
  report.sse = lm.sse;
  report.iterations = lm.iterations;
  report.status = lm.status;

  const auto n = static_cast<double>(report.n);
  report.se_alpha = std::sqrt(std::max(0.0, report.covariance(0, 0)) / n);
  report.se_beta = std::sqrt(std::max(0.0, report.covariance(1, 1)) / n);

  const ThetaVariance tv = theta_variance(est, report.covariance, report.n);
  report.theta_variance = tv.variance;
  report.theta_se = tv.se;
  report.theta_variance_indefinite = tv.indefinite;

  std::tie(report.sig_alpha, report.sig_beta) = significance(report);
  report.gof = assess(data, est, options.level, options.ks_method);
  return report;
}

}  // namespace mbuw
