#include "mbuw/compare.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mbuw {

namespace {

std::optional<double> fit_theta(const Sample& s, int order, const LmConfig& lm) {
  FitOptions options;
  options.spec.order = order;
  options.lm = lm;
  try {
    const FitReport r = fit(s, options);
    if (r.status == LmStatus::max_iters || !std::isfinite(r.theta_hat)) return std::nullopt;
    return r.theta_hat;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

OrderSummary summarize(const std::vector<std::optional<double>>& estimates, double truth) {
  OrderSummary out;
  std::vector<double> ok;
  for (const auto& e : estimates) {
    if (e) ok.push_back(*e);
    else ++out.failure_count;
  }
  if (ok.empty()) throw std::runtime_error("every replicate fit failed");
  const auto m = static_cast<double>(ok.size());
  double sum = 0.0;
  for (double v : ok) sum += v;
  out.mean_theta_hat = sum / m;
  out.bias = out.mean_theta_hat - truth;
  double var = 0.0;
  double mse = 0.0;
  for (double v : ok) {
    var += (v - out.mean_theta_hat) * (v - out.mean_theta_hat);
    mse += (v - truth) * (v - truth);
  }
  out.variance = var / m;
  out.mse = mse / m;
  return out;
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

CompareResult run_compare(const CompareOptions& options) {
  if (options.replicates < 1) throw std::invalid_argument("replicates must be at least 1");
  if (options.n < 4) throw std::invalid_argument("comparison needs n >= 4");
  const Params truth = Params::from_theta(options.true_theta);
  options.lm.validate();

  std::vector<std::optional<double>> first(options.replicates);
  std::vector<std::optional<double>> second(options.replicates);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Sample s = sample(options.n, truth, replicate_seed(options.seed, i));
      first[i] = fit_theta(s, 1, options.lm);
      second[i] = fit_theta(s, 2, options.lm);
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, options.replicates));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (options.replicates + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(options.replicates, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  CompareResult out;
  out.true_theta = options.true_theta;
  out.n = options.n;
  out.replicates = options.replicates;
  out.order1 = summarize(first, options.true_theta);
  out.order2 = summarize(second, options.true_theta);
  return out;
}

}  // namespace mbuw
