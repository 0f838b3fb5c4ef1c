#pragma once

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <vector>

#include "mbuw/compare.hpp"
#include "mbuw/distribution.hpp"
#include "mbuw/fit.hpp"

namespace mbuw {

struct EcdfRow {
  double y;
  double ecdf_lo;
  double ecdf_hi;
  double fitted_cdf;
};

struct DensityRow {
  double y;
  double fitted_pdf;
};

std::vector<EcdfRow> ecdf_table(const Sample& s, const Params& p);

// Midpoint grid (j + 1/2) / points, j = 0..points-1.
std::vector<DensityRow> density_table(const Params& p, std::size_t points = 256);

struct PlotFiles {
  std::filesystem::path ecdf;
  std::filesystem::path density;
};

// Writes <prefix>_ecdf.csv and <prefix>_density.csv.
PlotFiles write_plot_data(const std::filesystem::path& prefix, const Sample& s, const Params& p);

// Fixed key set: alpha_hat beta_hat theta_hat se_alpha se_beta theta_se sse
// iterations ks ks_pvalue ad cvm decision n order estimator.
nlohmann::json fit_json(const FitReport& r);
nlohmann::json describe_json(const DescriptiveStats& d);
nlohmann::json compare_json(const CompareResult& c);

void write_fit_text(std::ostream& os, const FitReport& r);
void write_describe_text(std::ostream& os, const DescriptiveStats& d);
void write_compare_text(std::ostream& os, const CompareResult& c);

}  // namespace mbuw
