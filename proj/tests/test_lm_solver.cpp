#include <doctest.h>

#include <cmath>
#include <limits>

#include "mbuw/lm_solver.hpp"

using namespace mbuw;

namespace {

void check_monotone(const LmResult& r) {
  const auto s = r.accepted_sse();
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] <= s[i - 1]);
  CHECK(r.sse_trace.size() == r.lambda_trace.size());
  CHECK(r.sse_trace.size() == r.accepted.size());
}

LmConfig unbounded() {
  LmConfig cfg;
  cfg.param_floor = -std::numeric_limits<double>::infinity();
  return cfg;
}

}  // namespace

TEST_CASE("linear residual") {
  const ResidualFn res = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, x[0] - 2.0); };
  const JacobianFn jac = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Constant(1, 1, 1.0); };
  const LmResult r = solve(res, jac, Eigen::VectorXd::Zero(1), unbounded());
  CHECK(r.params[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.sse < 1e-20);
  CHECK(r.status != LmStatus::max_iters);
  check_monotone(r);
}

TEST_CASE("Rosenbrock least squares") {
  const ResidualFn res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(2);
    r << 1.0 - x[0], 10.0 * (x[1] - x[0] * x[0]);
    return r;
  };
  const JacobianFn jac = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd J(2, 2);
    J << -1.0, 0.0, -20.0 * x[0], 10.0;
    return J;
  };
  Eigen::VectorXd init(2);
  init << -1.2, 1.0;
  const LmResult r = solve(res, jac, init, unbounded());
  CHECK(std::abs(r.params[0] - 1.0) < 1e-6);
  CHECK(std::abs(r.params[1] - 1.0) < 1e-6);
  check_monotone(r);
  CHECK(r.covariance.rows() == 2);
  CHECK((r.covariance - r.covariance.transpose()).norm() == 0.0);
  CHECK(r.covariance(0, 0) >= 0.0);
  CHECK(r.covariance(1, 1) >= 0.0);
}

TEST_CASE("damping schedule follows the accept/reject rule") {
  const ResidualFn res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(2);
    r << 1.0 - x[0], 10.0 * (x[1] - x[0] * x[0]);
    return r;
  };
  const JacobianFn jac = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd J(2, 2);
    J << -1.0, 0.0, -20.0 * x[0], 10.0;
    return J;
  };
  Eigen::VectorXd init(2);
  init << -1.2, 1.0;
  const LmConfig cfg = unbounded();
  const LmResult r = solve(res, jac, init, cfg);
  REQUIRE(!r.lambda_trace.empty());
  CHECK(r.lambda_trace.front() == cfg.lambda0);
  for (std::size_t i = 1; i < r.lambda_trace.size(); ++i) {
    const double expected = r.lambda_trace[i - 1] * (r.accepted[i - 1] ? cfg.lambda_down : cfg.lambda_up);
    CHECK(r.lambda_trace[i] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("positivity floor rejects steps") {
  // minimum at x = -1 lies below the floor; the solver must stay positive
  const ResidualFn res = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, x[0] + 1.0); };
  const JacobianFn jac = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Constant(1, 1, 1.0); };
  LmConfig cfg;
  cfg.max_iters = 200;
  try {
    const LmResult r = solve(res, jac, Eigen::VectorXd::Constant(1, 1.0), cfg);
    CHECK(r.params[0] >= cfg.param_floor);
    check_monotone(r);
  } catch (const LmError&) {
    // acceptable: damping blew past its cap against the floor
  }
}

TEST_CASE("solver errors") {
  const ResidualFn bad = [](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Constant(1, std::numeric_limits<double>::quiet_NaN());
  };
  const JacobianFn jac = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Constant(1, 1, 1.0); };
  CHECK_THROWS_AS(solve(bad, jac, Eigen::VectorXd::Zero(1)), LmError);

  const ResidualFn ok = [](const Eigen::VectorXd& x) { return x; };
  const JacobianFn wrong = [](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(2, 2); };
  CHECK_THROWS_AS(solve(ok, wrong, Eigen::VectorXd::Ones(1)), LmError);

  LmConfig cfg;
  cfg.lambda_up = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = LmConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("max_iters stops the solver") {
  const ResidualFn res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(2);
    r << 1.0 - x[0], 10.0 * (x[1] - x[0] * x[0]);
    return r;
  };
  const JacobianFn jac = [](const Eigen::VectorXd& x) {
    Eigen::MatrixXd J(2, 2);
    J << -1.0, 0.0, -20.0 * x[0], 10.0;
    return J;
  };
  LmConfig cfg = unbounded();
  cfg.max_iters = 2;
  Eigen::VectorXd init(2);
  init << -1.2, 1.0;
  const LmResult r = solve(res, jac, init, cfg);
  CHECK(r.status == LmStatus::max_iters);
  CHECK(r.iterations == 2);
}
