#include <gtest/gtest.h>

#include "agdec/code_io.hpp"
#include "agdec/simulate.hpp"
#include "oracles.hpp"

using namespace agdec;
using agdec::testing::fixture;

namespace {
const PrecomputedCode& hermitian() {
  static const PrecomputedCode pc = precompute(load_code_file(fixture("hermitian_f9_26.json")));
  return pc;
}
}  // namespace

TEST(Simulate, UniformBelowStaysInRange) {
  auto rng = trial_rng(1, 2);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist[uniform_below(rng, 7)];
  for (int h : hist) EXPECT_GT(h, 800);
}

TEST(Simulate, ErrorsHaveExactWeight) {
  SimOptions so;
  so.error_weight = 4;
  so.seed = 3;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto trial = run_trial(hermitian(), so, t);
    EXPECT_EQ(std::count_if(trial.error.begin(), trial.error.end(), [](Elem e) { return !e.is_zero(); }), 4);
  }
}

TEST(Simulate, DeterministicAcrossThreadCounts) {
  SimOptions so;
  so.error_weight = 4;
  so.trials = 200;
  so.seed = 17;
  const auto a = simulate(hermitian(), so);
  so.threads = 4;
  const auto b = simulate(hermitian(), so);
  EXPECT_EQ(a.successes, 200);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.ties, b.ties);
  EXPECT_EQ(a.max_iterations, b.max_iterations);
  EXPECT_EQ(a.max_poly_degree, b.max_poly_degree);
  EXPECT_LE(a.max_iterations, 32);
  EXPECT_LE(a.max_poly_degree, hermitian().bounds.n_deg);
}

TEST(Simulate, ZeroWeight) {
  SimOptions so;
  so.trials = 10;
  const auto r = simulate(hermitian(), so);
  EXPECT_EQ(r.successes, 10);
  EXPECT_EQ(r.failures, 0);
}
