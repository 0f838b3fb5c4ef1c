#include "mbuw/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "mbuw/distribution.hpp"

namespace mbuw {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                              std::size_t max_panels) {
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (!(b > a)) throw std::invalid_argument("quadrature interval must satisfy a < b");

  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  std::size_t evaluations = 15;

  while (error > tol) {
    if (panels.size() >= max_panels) throw QuadratureError("quadrature tolerance not achieved", {value, error, evaluations});
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw QuadratureError("quadrature panel width underflow", {value, error, evaluations});
    panels.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Resum to shed drift from the running updates.
  double total = 0.0;
  double total_error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    total_error += panels.top().error;
    panels.pop();
  }
  return {total, total_error, evaluations};
}

QuadResult integrate_pwm(unsigned r, unsigned s, double theta, double tol, PwmVariable variable) {
  if (!(theta > 0.0)) throw std::domain_error("theta must be positive");
  const auto ri = static_cast<int>(r);
  const auto si = static_cast<int>(s);

  if (variable == PwmVariable::substituted) {
    auto integrand = [=](double t) {
      const double F = t * t * (3.0 - 2.0 * t);
      return std::pow(t, theta) * std::pow(F, ri) * std::pow(1.0 - F, si) * 6.0 * t * (1.0 - t);
    };
    return integrate_adaptive(integrand, 0.0, 1.0, tol);
  }

  const Params p = Params::from_theta(theta);
  auto integrand = [&](double y) {
    const double F = cdf(y, p);
    return y * std::pow(F, ri) * std::pow(1.0 - F, si) * pdf(y, p);
  };
  return integrate_adaptive(integrand, 0.0, 1.0, tol, 20000);
}

}  // namespace mbuw
