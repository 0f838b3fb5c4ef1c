#pragma once

#include <cstddef>
#include <cstdint>

#include "mbuw/fit.hpp"

namespace mbuw {

struct CompareOptions {
  double true_theta = 1.0;
  std::size_t n = 50;
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  LmConfig lm;
};

struct OrderSummary {
  double mean_theta_hat = 0.0;
  double bias = 0.0;
  double variance = 0.0;  // divisor = successful replicates
  double mse = 0.0;
  std::size_t failure_count = 0;
};

struct CompareResult {
  double true_theta = 0.0;
  std::size_t n = 0;
  std::size_t replicates = 0;
  OrderSummary order1;
  OrderSummary order2;
};

// Seed of replicate i, a pure function of (seed, i).
std::uint64_t replicate_seed(std::uint64_t seed, std::size_t index);

// Draws `replicates` samples at true_theta and fits each with order-1 and
// order-2 unbiased PWMs from init (1, 1). Throws std::runtime_error if every
// fit of some order fails.
CompareResult run_compare(const CompareOptions& options);

}  // namespace mbuw
