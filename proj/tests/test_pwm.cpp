#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "mbuw/pwm.hpp"
#include "uncorrected_forms.hpp"

using namespace mbuw;

namespace {

const std::vector<double> kThetaGrid = {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};

}  // namespace

TEST_CASE("closed forms at theta = 1 match the Beta(2,2) rationals") {
  CHECK(std::abs(pop_m101(1.0) - 13.0 / 70.0) < 1e-14);
  CHECK(std::abs(pop_m110(1.0) - 11.0 / 35.0) < 1e-14);
  CHECK(std::abs(pop_m102(1.0) - 43.0 / 420.0) < 1e-14);
  CHECK(std::abs(pop_m120(1.0) - 97.0 / 420.0) < 1e-14);
  CHECK(std::abs(pop_mean(1.0) - 0.5) < 1e-15);
  // 468 / 2520 before reduction
  CHECK(std::abs(pop_m101(1.0) - 468.0 / 2520.0) < 1e-15);
  CHECK(std::abs(pop_m120(1.0) - 1164.0 / 5040.0) < 1e-15);
}

TEST_CASE("closed-form limits and rational checks") {
  CHECK(pop_m110(1e-12) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(pop_m110(8.0) - 108.0 / 2184.0) < 1e-15);
  CHECK(pop_m110(Params(2.0, 3.0).theta()) == doctest::Approx(pop_m110(Params(8.0, 1.0).theta())).epsilon(1e-15));
  for (auto f : {pop_m101, pop_m110, pop_m102, pop_m120, pop_mean}) {
    CHECK_THROWS_AS(f(0.0), std::domain_error);
    CHECK_THROWS_AS(f(-1.0), std::domain_error);
  }
}

TEST_CASE("uncorrected rational forms fail the theta = 1 anchor") {
  CHECK(testing::uncorrected_m102(1.0) == doctest::Approx(1800560.0 / 1814400.0).epsilon(1e-14));
  CHECK(testing::uncorrected_m120(1.0) == doctest::Approx(11244.0 / 5040.0).epsilon(1e-14));
  CHECK(std::abs(testing::uncorrected_m102(1.0) - pop_m102(1.0)) > 0.8);
  CHECK(testing::uncorrected_m120(1.0) > 1.0);  // impossible for E[y F^2] with y, F in (0, 1)
  // the partial-fraction lines next to them are consistent with the corrected forms
  CHECK(testing::partial_fraction_m120_with_typo(1.0) != doctest::Approx(pop_m120(1.0)));
}

TEST_CASE("binomial identities between the two families") {
  for (double theta : kThetaGrid) {
    CHECK(std::abs(pop_m101(theta) - (pop_mean(theta) - pop_m110(theta))) < 1e-12);
    CHECK(std::abs(pop_m102(theta) - (pop_mean(theta) - 2.0 * pop_m110(theta) + pop_m120(theta))) < 1e-12);
  }
}

TEST_CASE("general expansion specializes to the closed forms") {
  for (double theta : kThetaGrid) {
    CHECK(std::abs(pop_pwm_general(0, 0, theta) - pop_mean(theta)) < 1e-13);
    CHECK(std::abs(pop_pwm_general(1, 0, theta) - pop_m110(theta)) < 1e-13);
    CHECK(std::abs(pop_pwm_general(0, 1, theta) - pop_m101(theta)) < 1e-13);
    CHECK(std::abs(pop_pwm_general(2, 0, theta) - pop_m120(theta)) < 1e-13);
    CHECK(std::abs(pop_pwm_general(0, 2, theta) - pop_m102(theta)) < 1e-13);
  }
  CHECK(pop_pwm_general(0, 0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(PwmExpansion(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PwmExpansion(0, 60), std::overflow_error);
  // coefficients of 6t(1-t) sum to zero at t = 1 for every (r, s)
  for (unsigned r = 0; r < 5; ++r) {
    const PwmExpansion e(r, 0);
    std::int64_t sum = 0;
    for (auto c : e.coefficients()) sum += c;
    CHECK(sum == 0);
  }
}

TEST_CASE("derivatives agree with central differences") {
  const double h = 1e-6;
  for (double theta : kThetaGrid) {
    auto fd = [&](double (*f)(double)) { return (f(theta + h) - f(theta - h)) / (2.0 * h); };
    CHECK(pop_m101_derivative(theta) == doctest::Approx(fd(pop_m101)).epsilon(1e-6));
    CHECK(pop_m110_derivative(theta) == doctest::Approx(fd(pop_m110)).epsilon(1e-6));
    CHECK(pop_m102_derivative(theta) == doctest::Approx(fd(pop_m102)).epsilon(1e-6));
    CHECK(pop_m120_derivative(theta) == doctest::Approx(fd(pop_m120)).epsilon(1e-6));
    CHECK(PwmExpansion(0, 3).derivative(theta) ==
          doctest::Approx((pop_pwm_general(0, 3, theta + h) - pop_pwm_general(0, 3, theta - h)) / (2 * h))
              .epsilon(1e-6));
  }
}

TEST_CASE("mean and M110 decrease in theta") {
  for (std::size_t i = 0; i + 1 < kThetaGrid.size(); ++i) {
    CHECK(pop_m110(kThetaGrid[i + 1]) < pop_m110(kThetaGrid[i]));
    CHECK(pop_mean(kThetaGrid[i + 1]) < pop_mean(kThetaGrid[i]));
  }
  for (double theta : kThetaGrid) {
    CHECK(pop_m110_derivative(theta) < 0.0);
    CHECK(pop_m120(theta) > 0.0);
    CHECK(pop_m120(theta) < 1.0);
  }
}

TEST_CASE("unbiased sample PWMs by hand") {
  const Sample s({0.2, 0.4, 0.6});
  CHECK(sample_pwm_unbiased(s, 0, 1) == doctest::Approx(0.4 / 3.0).epsilon(1e-14));
  CHECK(sample_pwm_unbiased(s, 1, 0) == doctest::Approx(0.8 / 3.0).epsilon(1e-14));
  CHECK(sample_pwm_unbiased(s, 0, 2) == doctest::Approx(0.2 / 3.0).epsilon(1e-14));
  CHECK(sample_pwm_unbiased(s, 2, 0) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(sample_pwm_unbiased(s, 0, 0) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(sample_pwm_unbiased(s, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sample_pwm_unbiased(s, 1, 1), std::invalid_argument);
}

TEST_CASE("unbiased sample PWMs on the flood data") {
  const Sample f = testing::flood();
  const double a = sample_pwm_unbiased(f, 0, 1);
  const double b = sample_pwm_unbiased(f, 1, 0);
  CHECK(std::abs(a - 0.1773) < 5e-5);
  CHECK(std::abs(b - 0.2452) < 5e-5);
  CHECK(std::abs(a + b - f.mean()) < 1e-12);
}

TEST_CASE("first-order estimators always sum to the mean") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> v(3 + rep);
    for (auto& x : v) x = u(gen);
    const Sample s(v);
    CHECK(std::abs(sample_pwm_unbiased(s, 0, 1) + sample_pwm_unbiased(s, 1, 0) - s.mean()) < 1e-12);
  }
}

TEST_CASE("biased sample PWMs") {
  const Sample s({0.2, 0.4, 0.6});
  MomentSpec spec;
  spec.estimator = Estimator::biased;
  spec.plotting_b = 0.0;
  CHECK(sample_pwm_biased(s, 1, 0, spec) == doctest::Approx(2.8 / 9.0).epsilon(1e-14));
  for (double b : {0.0, 0.35, 0.7}) {
    spec.plotting_b = b;
    CHECK(sample_pwm_biased(s, 0, 0, spec) == doctest::Approx(0.4).epsilon(1e-14));
  }
  spec.plotting_b = 1.5;
  CHECK_THROWS_AS(sample_pwm_biased(s, 1, 0, spec), std::out_of_range);
  spec.plotting_form = PlottingForm::i_minus_b_over_n_plus_1_minus_2b;
  spec.plotting_b = 0.6;
  CHECK_THROWS_AS(sample_pwm_biased(s, 1, 0, spec), std::out_of_range);
  spec.plotting_b = 0.0;
  // Weibull plotting position i / (n + 1)
  CHECK(sample_pwm_biased(s, 1, 0, spec) == doctest::Approx((0.2 * 0.25 + 0.4 * 0.5 + 0.6 * 0.75) / 3.0));

  const Sample f = testing::flood();
  MomentSpec def;
  def.estimator = Estimator::biased;
  CHECK(std::abs(sample_pwm_biased(f, 0, 1, def) - sample_pwm_unbiased(f, 0, 1)) < 0.02);
  CHECK(std::abs(sample_pwm_biased(f, 1, 0, def) - sample_pwm_unbiased(f, 1, 0)) < 0.02);
}

TEST_CASE("estimators ignore input order") {
  std::vector<double> v = {0.26, 0.74, 0.41, 0.3, 0.65, 0.38, 0.42, 0.49};
  const Sample sorted(v);
  std::shuffle(v.begin(), v.end(), std::mt19937(5));
  const Sample shuffled(v);
  MomentSpec spec;
  spec.estimator = Estimator::biased;
  for (unsigned k = 0; k <= 2; ++k) {
    CHECK(sample_pwm_unbiased(sorted, 0, k) == sample_pwm_unbiased(shuffled, 0, k));
    CHECK(sample_pwm_unbiased(sorted, k, 0) == sample_pwm_unbiased(shuffled, k, 0));
    CHECK(sample_pwm_biased(sorted, k, 0, spec) == sample_pwm_biased(shuffled, k, 0, spec));
  }
}

TEST_CASE("sample_pair follows the spec") {
  const Sample s({0.2, 0.4, 0.6});
  MomentSpec spec;
  spec.order = 2;
  const PwmPair p = sample_pair(s, spec);
  CHECK(p.a == doctest::Approx(0.2 / 3.0));
  CHECK(p.b == doctest::Approx(0.2));
  CHECK(p.order == 2);
  spec.order = 3;
  CHECK_THROWS_AS(sample_pair(s, spec), std::invalid_argument);
}

TEST_CASE("binomial conversion between families") {
  const std::vector<double> betas = {0.5, 11.0 / 35.0, 97.0 / 420.0};
  const auto alphas = convert_pwm(betas);
  CHECK(alphas[0] == doctest::Approx(0.5));
  CHECK(alphas[1] == doctest::Approx(13.0 / 70.0).epsilon(1e-14));
  CHECK(alphas[2] == doctest::Approx(43.0 / 420.0).epsilon(1e-14));
  const auto back = convert_pwm(alphas);
  for (std::size_t i = 0; i < betas.size(); ++i) CHECK(back[i] == doctest::Approx(betas[i]).epsilon(1e-14));
  CHECK_THROWS(convert_pwm(std::vector<double>{}));

  // population families convert into each other at any theta
  for (double theta : kThetaGrid) {
    std::vector<double> b;
    std::vector<double> a;
    for (unsigned k = 0; k < 5; ++k) {
      b.push_back(pop_pwm_general(k, 0, theta));
      a.push_back(pop_pwm_general(0, k, theta));
    }
    const auto converted = convert_pwm(b);
    for (unsigned k = 0; k < 5; ++k) CHECK(std::abs(converted[k] - a[k]) < 1e-12);
  }
}

TEST_CASE("moment spec parsing") {
  CHECK(parse_estimator("biased") == Estimator::biased);
  CHECK_THROWS(parse_estimator("mle"));
  CHECK(parse_plotting_form(to_string(PlottingForm::i_minus_b_over_n_plus_1_minus_2b)) ==
        PlottingForm::i_minus_b_over_n_plus_1_minus_2b);
}
