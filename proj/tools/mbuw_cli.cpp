#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "mbuw/commands.hpp"

namespace {

struct Flags {
  std::string input;
  int order = 1;
  std::string estimator = "unbiased";
  double plotting_b = 0.35;
  std::string plotting_form = "i_minus_b_over_n";
  double init_alpha = 1.0;
  double init_beta = 1.0;
  double lambda0 = 1e-3;
  int max_iters = 500;
  double level = 0.05;
  std::string format = "text";
  std::string plot_out;
  std::string residual_form = "normalized";
  std::string ks_method = "stephens";
  double theta = 0.0;
  std::size_t n = 50;
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
};

void add_fit_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--order", f.order, "PWM pair: 1 = M(1,0,1)/M(1,1,0), 2 = M(1,0,2)/M(1,2,0)")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--estimator", f.estimator, "Sample PWM estimator")->check(CLI::IsMember({"unbiased", "biased"}));
  cmd->add_option("--plotting-b", f.plotting_b, "Plotting-position constant b");
  cmd->add_option("--plotting-form", f.plotting_form, "Plotting-position form")
      ->check(CLI::IsMember({"i_minus_b_over_n", "i_minus_b_over_n_plus_1_minus_2b"}));
  cmd->add_option("--lambda0", f.lambda0, "Initial LM damping");
  cmd->add_option("--max-iters", f.max_iters, "LM trial-step limit");
}

mbuw::RunConfig to_config(const Flags& f, const CLI::App* cmd) {
  mbuw::RunConfig cfg;
  cfg.input_path = f.input;
  cfg.fit.spec.order = f.order;
  cfg.fit.spec.estimator = mbuw::parse_estimator(f.estimator);
  cfg.fit.spec.plotting_b = f.plotting_b;
  cfg.fit.spec.plotting_form = mbuw::parse_plotting_form(f.plotting_form);
  cfg.fit.init_alpha = f.init_alpha;
  cfg.fit.init_beta = f.init_beta;
  cfg.fit.lm.lambda0 = f.lambda0;
  cfg.fit.lm.max_iters = f.max_iters;
  cfg.fit.level = f.level;
  cfg.fit.residual_form = mbuw::parse_residual_form(f.residual_form);
  cfg.fit.ks_method = mbuw::parse_ks_method(f.ks_method);
  cfg.output_format = f.format == "json" ? mbuw::OutputFormat::json : mbuw::OutputFormat::text;
  if (!f.plot_out.empty()) cfg.plot_out = f.plot_out;
  const CLI::Option* theta = cmd->get_option_no_throw("--theta");
  if (theta != nullptr && theta->count() > 0) {
    cfg.theta = f.theta;
    cfg.true_theta = f.theta;
  }
  cfg.n = f.n;
  cfg.replicates = f.replicates;
  cfg.seed = f.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probability-weighted-moment fitting for the median based unit Weibull distribution"};
  app.require_subcommand(1);
  Flags f;

  auto* fit = app.add_subcommand("fit", "Fit a sample and report estimates, errors and goodness of fit");
  auto* describe = app.add_subcommand("describe", "Descriptive statistics of a sample");
  auto* moments = app.add_subcommand("moments", "Sample PWMs, optionally next to population values at --theta");
  auto* plotdata = app.add_subcommand("plotdata", "Fit, then write ECDF and density CSV tables");
  auto* compare = app.add_subcommand("compare", "Monte Carlo comparison of order-1 and order-2 fits");

  for (auto* cmd : {fit, describe, moments, plotdata}) cmd->add_option("--input", f.input, "Data file")->required();
  for (auto* cmd : {fit, moments, plotdata}) add_fit_flags(cmd, f);
  for (auto* cmd : {fit, plotdata}) {
    cmd->add_option("--init-alpha", f.init_alpha, "Starting alpha");
    cmd->add_option("--init-beta", f.init_beta, "Starting beta");
    cmd->add_option("--level", f.level, "Significance level of the KS decision");
    cmd->add_option("--residual-form", f.residual_form, "LM residuals")
        ->check(CLI::IsMember({"normalized", "cleared"}));
    cmd->add_option("--ks-pvalue", f.ks_method, "KS p-value formula")->check(CLI::IsMember({"stephens", "asymptotic"}));
  }
  for (auto* cmd : {fit, plotdata}) cmd->add_option("--plot-out", f.plot_out, "Prefix for the CSV plot tables");
  for (auto* cmd : {fit, describe, moments, compare})
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  moments->add_option("--theta", f.theta, "Population theta = alpha^beta")->check(CLI::PositiveNumber);
  compare->add_option("--theta", f.theta, "True theta of the simulated samples")->check(CLI::PositiveNumber);
  compare->add_option("--n", f.n, "Sample size per replicate");
  compare->add_option("--replicates", f.replicates, "Number of replicates");
  compare->add_option("--seed", f.seed, "Base seed");
  compare->add_option("--lambda0", f.lambda0, "Initial LM damping");
  compare->add_option("--max-iters", f.max_iters, "LM trial-step limit");

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, int (*)(const mbuw::RunConfig&, std::ostream&, std::ostream&)> commands = {
      {fit, mbuw::cmd_fit},
      {describe, mbuw::cmd_describe},
      {moments, mbuw::cmd_moments},
      {plotdata, mbuw::cmd_plotdata},
      {compare, mbuw::cmd_compare}};
  for (const auto& [cmd, run] : commands) {
    if (!cmd->parsed()) continue;
    try {
      return run(to_config(f, cmd), std::cout, std::cerr);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}
