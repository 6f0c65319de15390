#include "agdec/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "agdec/errors.hpp"

namespace agdec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("uniform_below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Trial run_trial(const PrecomputedCode& pc, const SimOptions& opts, std::uint64_t trial) {
  const Field& F = pc.code.field;
  const int n = pc.n();
  if (opts.error_weight < 0 || opts.error_weight > n) throw DimensionError("error weight out of range");
  auto rng = trial_rng(opts.seed, trial);

  Trial out;
  out.message.resize(static_cast<std::size_t>(pc.k()));
  for (auto& m : out.message) m = Elem{static_cast<std::uint32_t>(uniform_below(rng, F.size()))};

  std::vector<int> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), 0);
  out.error.assign(static_cast<std::size_t>(n), F.zero());
  for (int j = 0; j < opts.error_weight; ++j) {
    const auto r = static_cast<std::size_t>(j) + uniform_below(rng, static_cast<std::uint64_t>(n - j));
    std::swap(pos[static_cast<std::size_t>(j)], pos[r]);
    out.error[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] =
        Elem{static_cast<std::uint32_t>(1 + uniform_below(rng, F.size() - 1))};
  }

  const auto codeword = encode(out.message, pc.code, pc.encoder);
  out.received.resize(codeword.size());
  for (std::size_t t = 0; t < codeword.size(); ++t) out.received[t] = F.add(codeword[t], out.error[t]);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.result = decode(out.received, pc, DecodeOptions{false, opts.checks});
    out.ok = out.result.message == out.message;
  } catch (const InvariantViolation& e) {
    out.violation = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SimReport simulate(const PrecomputedCode& pc, const SimOptions& opts,
                   const std::function<void(std::uint64_t, const Trial&)>& observer) {
  if (opts.trials < 1) throw DimensionError("trials must be positive");
  const auto N = static_cast<std::size_t>(opts.trials);
  std::vector<Trial> results(N);

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(N)));
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < N; t += workers) results[t] = run_trial(pc, opts, t);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  SimReport rep;
  rep.trials = opts.trials;
  rep.error_weight = opts.error_weight;
  double total = 0.0;
  for (std::size_t t = 0; t < N; ++t) {
    const Trial& tr = results[t];
    if (observer) observer(t, tr);
    if (tr.ok) {
      ++rep.successes;
    } else {
      ++rep.failures;
    }
    if (!tr.violation.empty() && rep.first_violation.empty()) {
      rep.first_violation = "trial " + std::to_string(t) + ": " + tr.violation;
    }
    if (tr.result.tie_flag) ++rep.ties;
    rep.max_iterations = std::max(rep.max_iterations, tr.result.iterations);
    rep.max_poly_degree = std::max(rep.max_poly_degree, tr.result.max_poly_degree);
    total += tr.seconds;
  }
  rep.mean_decode_seconds = total / static_cast<double>(N);
  return rep;
}

}  // namespace agdec
