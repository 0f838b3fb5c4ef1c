#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "mbuw/distribution.hpp"

namespace mbuw {

enum class Decision { reject, fail_to_reject };

enum class KsPvalueMethod {
  stephens,   // lambda = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) D
  asymptotic  // lambda = sqrt(n) D
};

std::string_view to_string(Decision d);
std::string_view to_string(KsPvalueMethod m);
KsPvalueMethod parse_ks_method(std::string_view s);

struct GofReport {
  double ks = 0.0;
  double ks_pvalue = 1.0;
  double ad = 0.0;
  double cvm = 0.0;
  Decision decision = Decision::fail_to_reject;
  double level = 0.05;
};

using CdfFn = std::function<double(double)>;

// sup |ECDF - F| over both sides of every step.
double ks_statistic(const Sample& s, const CdfFn& cdf);

// Kolmogorov tail probability Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_tail(double lambda);

double ks_pvalue(double d, std::size_t n, KsPvalueMethod method = KsPvalueMethod::stephens);

// Anderson-Darling A^2. Throws std::domain_error when F hits 0 or 1 at a data point.
double ad_statistic(const Sample& s, const CdfFn& cdf);

// Cramer-von Mises W^2.
double cvm_statistic(const Sample& s, const CdfFn& cdf);

// reject iff p < level
Decision decide(double p, double level);

GofReport assess(const Sample& s, const Params& p, double level = 0.05,
                 KsPvalueMethod method = KsPvalueMethod::stephens);

}  // namespace mbuw
