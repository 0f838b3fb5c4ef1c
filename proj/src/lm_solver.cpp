#include "mbuw/lm_solver.hpp"

#include <cmath>
#include <limits>

namespace mbuw {

namespace {

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

void LmConfig::validate() const {
  if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be positive");
  if (!(lambda_up > 1.0)) throw std::invalid_argument("lambda_up must exceed 1");
  if (!(lambda_down > 0.0 && lambda_down < 1.0)) throw std::invalid_argument("lambda_down must lie in (0, 1)");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(step_tol > 0.0) || !(sse_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
  if (!(lambda_max > lambda0)) throw std::invalid_argument("lambda_max must exceed lambda0");
}

std::string_view to_string(LmStatus s) {
  switch (s) {
    case LmStatus::converged_step: return "converged_step";
    case LmStatus::converged_sse: return "converged_sse";
    case LmStatus::max_iters: return "max_iters";
  }
  return "unknown";
}

std::vector<double> LmResult::accepted_sse() const {
  std::vector<double> out{initial_sse};
  for (std::size_t i = 0; i < sse_trace.size(); ++i)
    if (accepted[i]) out.push_back(sse_trace[i]);
  return out;
}

LmResult solve(const ResidualFn& residual, const JacobianFn& jacobian, const Eigen::VectorXd& init,
               const LmConfig& cfg) {
  cfg.validate();
  if (!all_finite(init)) throw LmError("initial parameters are not finite");

  const Eigen::Index dim = init.size();
  LmResult out;
  Eigen::VectorXd p = init;
  Eigen::VectorXd r = residual(p);
  if (!all_finite(r)) throw LmError("residual is not finite at the initial parameters");
  double sse = r.squaredNorm();
  out.initial_sse = sse;

  double lambda = cfg.lambda0;
  double accepted_lambda = cfg.lambda0;
  bool done = sse == 0.0;
  out.status = done ? LmStatus::converged_sse : LmStatus::max_iters;

  while (!done && out.iterations < cfg.max_iters) {
    const Eigen::MatrixXd J = jacobian(p);
    if (J.rows() != r.size() || J.cols() != dim) throw LmError("jacobian dimensions do not match the residual");
    const Eigen::MatrixXd normal = J.transpose() * J;
    const Eigen::VectorXd gradient = J.transpose() * r;

    bool accepted = false;
    while (!accepted && !done && out.iterations < cfg.max_iters) {
      const Eigen::MatrixXd damped = normal + lambda * Eigen::MatrixXd::Identity(dim, dim);
      const Eigen::LDLT<Eigen::MatrixXd> ldlt(damped);
      if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        lambda *= cfg.lambda_up;
        if (lambda > cfg.lambda_max) throw LmError("normal equations remain singular as damping grows");
        continue;
      }
      const Eigen::VectorXd step = -ldlt.solve(gradient);
      if (step.norm() < cfg.step_tol) {
        out.status = LmStatus::converged_step;
        done = true;
        break;
      }

      ++out.iterations;
      const Eigen::VectorXd trial = p + step;
      double trial_sse = std::numeric_limits<double>::infinity();
      Eigen::VectorXd trial_r;
      if (trial.minCoeff() >= cfg.param_floor) {
        trial_r = residual(trial);
        if (all_finite(trial_r)) trial_sse = trial_r.squaredNorm();
      }
      out.sse_trace.push_back(trial_sse);
      out.lambda_trace.push_back(lambda);
      out.accepted.push_back(trial_sse < sse);

      if (trial_sse < sse) {
        const double drop = sse - trial_sse;
        p = trial;
        r = std::move(trial_r);
        sse = trial_sse;
        accepted_lambda = lambda;
        lambda *= cfg.lambda_down;
        accepted = true;
        if (drop < cfg.sse_tol || sse == 0.0) {
          out.status = LmStatus::converged_sse;
          done = true;
        } else if (step.norm() < cfg.step_tol) {
          out.status = LmStatus::converged_step;
          done = true;
        }
      } else {
        lambda *= cfg.lambda_up;
        if (lambda > cfg.lambda_max) throw LmError("damping exceeded its limit without reducing the residual");
      }
    }
  }

  const Eigen::MatrixXd J = jacobian(p);
  const Eigen::MatrixXd damped = J.transpose() * J + accepted_lambda * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd cov = damped.ldlt().solve(Eigen::MatrixXd::Identity(dim, dim));
  out.covariance = 0.5 * (cov + cov.transpose());
  out.params = p;
  out.sse = sse;
  out.lambda = accepted_lambda;
  return out;
}

}  // namespace mbuw
