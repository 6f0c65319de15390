#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "agdec/decoder.hpp"

namespace agdec {

struct SimReport {
  int trials = 0;
  int error_weight = 0;
  int successes = 0;
  int failures = 0;
  int ties = 0;
  int max_iterations = 0;
  int max_poly_degree = 0;
  double mean_decode_seconds = 0.0;
  /// First invariant violation seen, if any.
  std::string first_violation;
};

struct SimOptions {
  int error_weight = 0;
  int trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  CheckLevel checks = CheckLevel::basic;
};

struct Trial {
  std::vector<Elem> message;
  std::vector<Elem> error;
  std::vector<Elem> received;
  DecodeResult result;
  bool ok = false;
  std::string violation;
  double seconds = 0.0;
};

/// Per-trial stream: mt19937_64 seeded with splitmix64(seed ^ splitmix64(trial)).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform on [0, bound) by rejection, independent of the standard library's
/// distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random message, uniform t-subset support, uniform nonzero error values.
Trial run_trial(const PrecomputedCode& pc, const SimOptions& opts, std::uint64_t trial);

/// Runs all trials; `observer` (if set) sees every trial in index order.
SimReport simulate(const PrecomputedCode& pc, const SimOptions& opts,
                   const std::function<void(std::uint64_t, const Trial&)>& observer = {});

}  // namespace agdec
