#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace mbuw {

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Thrown when the requested tolerance is not reached; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const char* what, QuadResult best) : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b].
// Stops when the summed error estimate drops below tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                              std::size_t max_panels = 5000);

enum class PwmVariable {
  substituted,  // t = y^(1/theta); the integrand is t^theta times a polynomial
  direct        // integrate y F^r (1 - F)^s f(y) in y
};

// Numerical M(1,r,s) for the MBUW law, independent of the closed forms.
QuadResult integrate_pwm(unsigned r, unsigned s, double theta, double tol,
                         PwmVariable variable = PwmVariable::substituted);

}  // namespace mbuw
