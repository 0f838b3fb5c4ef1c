#include "mbuw/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace mbuw {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << std::setprecision(10);
  return out;
}

nlohmann::json summary_json(const OrderSummary& s) {
  return {{"mean_theta_hat", s.mean_theta_hat},
          {"bias", s.bias},
          {"variance", s.variance},
          {"mse", s.mse},
          {"failure_count", s.failure_count}};
}

}  // namespace

std::vector<EcdfRow> ecdf_table(const Sample& s, const Params& p) {
  const auto n = static_cast<double>(s.size());
  std::vector<EcdfRow> rows;
  rows.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    rows.push_back({s[i], static_cast<double>(i) / n, static_cast<double>(i + 1) / n, cdf(s[i], p)});
  return rows;
}

std::vector<DensityRow> density_table(const Params& p, std::size_t points) {
  if (points == 0) throw std::invalid_argument("density grid needs at least one point");
  std::vector<DensityRow> rows;
  rows.reserve(points);
  for (std::size_t j = 0; j < points; ++j) {
    const double y = (static_cast<double>(j) + 0.5) / static_cast<double>(points);
    rows.push_back({y, pdf(y, p)});
  }
  return rows;
}

PlotFiles write_plot_data(const std::filesystem::path& prefix, const Sample& s, const Params& p) {
  PlotFiles files{prefix.string() + "_ecdf.csv", prefix.string() + "_density.csv"};
  {
    auto out = open_for_writing(files.ecdf);
    out << "y,ecdf_lo,ecdf_hi,fitted_cdf\n";
    for (const auto& r : ecdf_table(s, p)) out << r.y << ',' << r.ecdf_lo << ',' << r.ecdf_hi << ',' << r.fitted_cdf << '\n';
  }
  {
    auto out = open_for_writing(files.density);
    out << "y_grid,fitted_pdf\n";
    for (const auto& r : density_table(p)) out << r.y << ',' << r.fitted_pdf << '\n';
  }
  return files;
}

nlohmann::json fit_json(const FitReport& r) {
  return {{"alpha_hat", r.alpha_hat},
          {"beta_hat", r.beta_hat},
          {"theta_hat", r.theta_hat},
          {"se_alpha", r.se_alpha},
          {"se_beta", r.se_beta},
          {"theta_se", r.theta_se},
          {"sse", r.sse},
          {"iterations", r.iterations},
          {"ks", r.gof.ks},
          {"ks_pvalue", r.gof.ks_pvalue},
          {"ad", r.gof.ad},
          {"cvm", r.gof.cvm},
          {"decision", to_string(r.gof.decision)},
          {"n", r.n},
          {"order", r.spec.order},
          {"estimator", to_string(r.spec.estimator)}};
}

nlohmann::json describe_json(const DescriptiveStats& d) {
  return {{"min", d.min},   {"mean", d.mean},     {"stdev", d.stdev},   {"skewness", d.skewness}, {"kurtosis", d.kurtosis},
          {"q1", d.q1},     {"median", d.median}, {"q3", d.q3},         {"max", d.max}};
}

nlohmann::json compare_json(const CompareResult& c) {
  return {{"true_theta", c.true_theta},
          {"n", c.n},
          {"replicates", c.replicates},
          {"order1", summary_json(c.order1)},
          {"order2", summary_json(c.order2)}};
}

void write_fit_text(std::ostream& os, const FitReport& r) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(6);
  os << "PWM fit (order " << r.spec.order << ", " << to_string(r.spec.estimator);
  if (r.spec.estimator == Estimator::biased)
    os << ", b = " << r.spec.plotting_b << ", " << to_string(r.spec.plotting_form);
  os << ", " << to_string(r.residual_form) << " residuals), n = " << r.n << "\n";
  os << "  sample PWMs        a = " << r.sample_pwms.a << "  b = " << r.sample_pwms.b << "\n";
  os << "  alpha_hat          " << r.alpha_hat << "  (se " << r.se_alpha << ", sig " << r.sig_alpha << ")\n";
  os << "  beta_hat           " << r.beta_hat << "  (se " << r.se_beta << ", sig " << r.sig_beta << ")\n";
  os << "  theta_hat          " << r.theta_hat << "  (se " << r.theta_se
     << (r.theta_variance_indefinite ? ", covariance indefinite" : "") << ")\n";
  os << "  note               alpha and beta enter only through theta = alpha^beta; their split depends on the start\n";
  os << "  covariance         [" << r.covariance(0, 0) << ", " << r.covariance(0, 1) << "; " << r.covariance(1, 0)
     << ", " << r.covariance(1, 1) << "]\n";
  os << "  sse                " << r.sse << "\n";
  os << "  iterations         " << r.iterations << " (" << to_string(r.status) << ")\n";
  os << "  KS                 " << r.gof.ks << "  p = " << r.gof.ks_pvalue << "\n";
  os << "  AD                 " << r.gof.ad << "\n";
  os << "  CvM                " << r.gof.cvm << "\n";
  os << "  decision           " << to_string(r.gof.decision) << " at level " << r.gof.level << "\n";
  os.flags(flags);
  os.precision(prec);
}

void write_describe_text(std::ostream& os, const DescriptiveStats& d) {
  const auto prec = os.precision();
  os << std::setprecision(6);
  os << "min       " << d.min << "\n"
     << "mean      " << d.mean << "\n"
     << "stdev     " << d.stdev << "\n"
     << "skewness  " << d.skewness << "\n"
     << "kurtosis  " << d.kurtosis << "\n"
     << "q1        " << d.q1 << "\n"
     << "median    " << d.median << "\n"
     << "q3        " << d.q3 << "\n"
     << "max       " << d.max << "\n";
  os.precision(prec);
}

void write_compare_text(std::ostream& os, const CompareResult& c) {
  const auto prec = os.precision();
  os << std::setprecision(6);
  os << "theta* = " << c.true_theta << ", n = " << c.n << ", replicates = " << c.replicates << "\n";
  os << "order  mean_theta_hat  bias  variance  mse  failures\n";
  for (int k = 1; k <= 2; ++k) {
    const OrderSummary& s = k == 1 ? c.order1 : c.order2;
    os << k << "  " << s.mean_theta_hat << "  " << s.bias << "  " << s.variance << "  " << s.mse << "  "
       << s.failure_count << "\n";
  }
  os.precision(prec);
}

}  // namespace mbuw
