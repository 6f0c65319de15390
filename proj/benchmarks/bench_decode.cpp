#include <benchmark/benchmark.h>

#include "agdec/code_io.hpp"
#include "agdec/simulate.hpp"

namespace {

const agdec::PrecomputedCode& load(const std::string& name) {
  static std::map<std::string, agdec::PrecomputedCode> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, agdec::precompute(agdec::load_code_file(std::string(AGDEC_FIXTURE_DIR) + "/" + name)))
             .first;
  }
  return it->second;
}

void decode_random(benchmark::State& state, const std::string& name, int weight) {
  const auto& pc = load(name);
  agdec::SimOptions so;
  so.error_weight = weight;
  so.seed = 1;
  std::vector<std::vector<agdec::Elem>> words;
  for (std::uint64_t t = 0; t < 64; ++t) words.push_back(agdec::run_trial(pc, so, t).received);
  const agdec::DecodeOptions opts{false, agdec::CheckLevel::basic};
  std::size_t i = 0;
  for (auto _ : state) {
    auto res = agdec::decode(words[i++ % words.size()], pc, opts);
    benchmark::DoNotOptimize(res.message.data());
  }
}

void precompute_code(benchmark::State& state, const std::string& name) {
  const auto code = agdec::load_code_file(std::string(AGDEC_FIXTURE_DIR) + "/" + name);
  for (auto _ : state) {
    auto pc = agdec::precompute(code);
    benchmark::DoNotOptimize(pc.d_lo);
  }
}

}  // namespace

BENCHMARK_CAPTURE(decode_random, hermitian_t4, std::string("hermitian_f9_26.json"), 4);
BENCHMARK_CAPTURE(decode_random, klein_q1_t2, std::string("klein_f8_q1.json"), 2);
BENCHMARK_CAPTURE(decode_random, rs63_t12, std::string("rs_f64_63.json"), 12);
BENCHMARK_CAPTURE(precompute_code, hermitian, std::string("hermitian_f9_26.json"));
BENCHMARK_CAPTURE(precompute_code, rs63, std::string("rs_f64_63.json"));

BENCHMARK_MAIN();
