#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "mbuw/compare.hpp"
#include "mbuw/fit.hpp"

namespace mbuw {

enum class OutputFormat { text, json };

struct RunConfig {
  std::filesystem::path input_path;
  FitOptions fit;
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::filesystem::path> plot_out;
  std::optional<double> theta;
  double true_theta = 1.0;
  std::size_t n = 50;
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
};

// Each command returns a process exit code and reports failures on err.
int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_describe(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace mbuw
