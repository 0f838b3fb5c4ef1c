#include "mbuw/commands.hpp"

#include <exception>
#include <iomanip>
#include <ostream>

#include "mbuw/io.hpp"
#include "mbuw/report.hpp"

namespace mbuw {

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Sample data = read_sample(cfg.input_path);
    const FitReport report = fit(data, cfg.fit);
    if (cfg.output_format == OutputFormat::json) out << fit_json(report).dump(2) << "\n";
    else write_fit_text(out, report);
    if (cfg.plot_out) write_plot_data(*cfg.plot_out, data, Params(report.alpha_hat, report.beta_hat));
  });
}

int cmd_describe(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DescriptiveStats d = describe(read_sample(cfg.input_path));
    if (cfg.output_format == OutputFormat::json) out << describe_json(d).dump(2) << "\n";
    else write_describe_text(out, d);
  });
}

int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Sample data = read_sample(cfg.input_path);
    const MomentSpec& spec = cfg.fit.spec;
    const PwmPair s = sample_pair(data, spec);
    nlohmann::json j = {{"order", spec.order},
                        {"estimator", to_string(spec.estimator)},
                        {"sample", {{"a", s.a}, {"b", s.b}}}};
    if (cfg.theta) {
      const PwmPair pop = population_pair(spec.order, *cfg.theta);
      j["theta"] = *cfg.theta;
      j["population"] = {{"a", pop.a}, {"b", pop.b}};
    }
    if (cfg.output_format == OutputFormat::json) {
      out << j.dump(2) << "\n";
      return;
    }
    const int o = spec.order;
    const auto prec = out.precision();
    out << std::setprecision(6);
    out << "sample " << to_string(spec.estimator) << "  M(1,0," << o << ") = " << s.a << "  M(1," << o
        << ",0) = " << s.b << "\n";
    if (cfg.theta) {
      const PwmPair pop = population_pair(o, *cfg.theta);
      out << "population theta=" << *cfg.theta << "  M(1,0," << o << ") = " << pop.a << "  M(1," << o
          << ",0) = " << pop.b << "\n";
    }
    out.precision(prec);
  });
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.plot_out) throw std::invalid_argument("plotdata needs --plot-out");
    const Sample data = read_sample(cfg.input_path);
    const FitReport report = fit(data, cfg.fit);
    const PlotFiles files = write_plot_data(*cfg.plot_out, data, Params(report.alpha_hat, report.beta_hat));
    out << files.ecdf.string() << "\n" << files.density.string() << "\n";
  });
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CompareOptions options;
    options.true_theta = cfg.true_theta;
    options.n = cfg.n;
    options.replicates = cfg.replicates;
    options.seed = cfg.seed;
    options.lm = cfg.fit.lm;
    const CompareResult c = run_compare(options);
    if (cfg.output_format == OutputFormat::json) out << compare_json(c).dump(2) << "\n";
    else write_compare_text(out, c);
  });
}

}  // namespace mbuw
