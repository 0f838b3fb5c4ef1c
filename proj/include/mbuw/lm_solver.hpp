#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace mbuw {

struct LmConfig {
  double lambda0 = 1e-3;
  double lambda_up = 10.0;
  double lambda_down = 0.1;
  int max_iters = 500;
  double step_tol = 1e-10;
  double sse_tol = 1e-14;
  // Trial points with any coordinate below this are rejected. -inf disables.
  double param_floor = 1e-8;
  double lambda_max = 1e12;

  void validate() const;
};

enum class LmStatus { converged_step, converged_sse, max_iters };

std::string_view to_string(LmStatus s);

struct LmResult {
  Eigen::VectorXd params;
  double sse = 0.0;
  double initial_sse = 0.0;
  int iterations = 0;  // trial steps taken, accepted or not
  LmStatus status = LmStatus::max_iters;
  double lambda = 0.0;  // damping of the last accepted step
  // (J'J + lambda I)^-1 at the final parameters
  Eigen::MatrixXd covariance;
  // One entry per trial step.
  std::vector<double> sse_trace;
  std::vector<double> lambda_trace;
  std::vector<bool> accepted;

  std::vector<double> accepted_sse() const;
};

class LmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using JacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

// Minimizes ||r(p)||^2 with the update p <- p - (J'J + lambda I)^-1 J' r, where
// J = dr/dp. Improving steps are accepted and shrink lambda by lambda_down;
// anything else is rejected and grows lambda by lambda_up.
LmResult solve(const ResidualFn& residual, const JacobianFn& jacobian, const Eigen::VectorXd& init,
               const LmConfig& cfg = {});

}  // namespace mbuw
