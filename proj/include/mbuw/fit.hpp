#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string_view>
#include <utility>

#include "mbuw/distribution.hpp"
#include "mbuw/gof.hpp"
#include "mbuw/lm_solver.hpp"
#include "mbuw/pwm.hpp"

namespace mbuw {

enum class ResidualForm {
  normalized,  // target - M(theta)
  cleared      // denominator(theta) * (target - M(theta)), the polynomial objective
};

std::string_view to_string(ResidualForm f);
ResidualForm parse_residual_form(std::string_view s);

struct FitOptions {
  MomentSpec spec;
  LmConfig lm;
  double init_alpha = 1.0;
  double init_beta = 1.0;
  ResidualForm residual_form = ResidualForm::normalized;
  double level = 0.05;
  KsPvalueMethod ks_method = KsPvalueMethod::stephens;
};

struct ThetaVariance {
  double variance = 0.0;
  double se = 0.0;
  bool indefinite = false;  // g V g' < 0; se is NaN
};

struct FitReport {
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double theta_hat = 0.0;
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();
  double se_alpha = 0.0;
  double se_beta = 0.0;
  double theta_variance = 0.0;
  double theta_se = 0.0;
  bool theta_variance_indefinite = false;
  double sig_alpha = 1.0;
  double sig_beta = 1.0;
  PwmPair sample_pwms;
  double sse = 0.0;
  int iterations = 0;
  LmStatus status = LmStatus::max_iters;
  MomentSpec spec;
  ResidualForm residual_form = ResidualForm::normalized;
  GofReport gof;
  std::size_t n = 0;
  LmResult solver;
};

// Two residuals for the chosen PWM order, sample side minus population side.
Eigen::Vector2d residuals(const Params& p, const PwmPair& targets, int order,
                          ResidualForm form = ResidualForm::normalized);

// d residuals / d(alpha, beta). Both rows are multiples of d theta / d(alpha, beta),
// so the matrix has rank at most one.
Eigen::Matrix2d jacobian(const Params& p, const PwmPair& targets, int order,
                         ResidualForm form = ResidualForm::normalized);
Eigen::Matrix2d jacobian(const Params& p, int order);

// (beta alpha^(beta - 1), alpha^beta ln alpha)
Eigen::Vector2d theta_gradient(const Params& p);

// Delta-method variance g V g' / n of theta = alpha^beta.
ThetaVariance theta_variance(const Params& p, const Eigen::Matrix2d& cov, std::size_t n);
ThetaVariance theta_variance(const FitReport& report);

// Two-sided normal p-value of estimate / se against zero.
double normal_two_sided_p(double estimate, double se);
std::pair<double, double> significance(const FitReport& report);

// Least-squares match of population PWMs to a given target pair.
LmResult fit_targets(const PwmPair& targets, const Params& init, const LmConfig& cfg = {},
                     ResidualForm form = ResidualForm::normalized);

FitReport fit(const Sample& data, const FitOptions& options = {});

}  // namespace mbuw
