#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

#include "agdec/code_io.hpp"
#include "agdec/decoder.hpp"
#include "agdec/errors.hpp"
#include "agdec/notation.hpp"
#include "agdec/precompute.hpp"
#include "agdec/simulate.hpp"

namespace agdec::cli {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::string code_file;
  std::string format = "text";
  bool cache = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;

  std::string slurp_stdin() {
    if (stdin_used) throw ParseError("standard input requested twice");
    stdin_used = true;
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
};

PrecomputedCode load(const Common& c, Io& io) {
  if (c.code_file == "-") return precompute(parse_code(io.slurp_stdin()));
  return load_precomputed(c.code_file, c.cache);
}

std::vector<Elem> read_vector(const std::string& arg, const Field& F, Io& io) {
  return parse_vector(arg == "-" ? io.slurp_stdin() : arg, F);
}

json elems_json(const std::vector<Elem>& v, const Field& F) {
  json a = json::array();
  for (auto e : v) a.push_back(F.digits(e));
  return a;
}

int cmd_info(const Common& c, Io& io) {
  const auto pc = load(c, io);
  const auto& code = pc.code;
  if (c.format == "json") {
    json j;
    j["n"] = code.n;
    j["k"] = pc.k();
    j["gamma"] = code.gamma;
    j["genus"] = code.genus;
    j["degG"] = code.degG;
    j["nu"] = json::array();
    for (auto it = pc.nu_table.rbegin(); it != pc.nu_table.rend(); ++it) {
      j["nu"].push_back({{"s", it->first}, {"nu", it->second}});
    }
    j["d_lo"] = pc.d_lo;
    j["N_h"] = pc.bounds.n_h;
    j["N_eta"] = pc.bounds.n_eta;
    j["N_deg"] = pc.bounds.n_deg;
    j["N_iter"] = pc.bounds.n_iter;
    j["warnings"] = pc.warnings;
    io.out << j.dump(2) << '\n';
    return kOk;
  }
  auto& o = io.out;
  o << "n       " << code.n << '\n'
    << "k       " << pc.k() << '\n'
    << "gamma   " << code.gamma << '\n'
    << "genus   " << code.genus << '\n'
    << "deg G   " << code.degG << '\n'
    << "nu(s)  ";
  for (auto it = pc.nu_table.rbegin(); it != pc.nu_table.rend(); ++it) o << ' ' << it->first << ':' << it->second;
  o << '\n'
    << "d_LO    " << pc.d_lo << '\n'
    << "N_h     " << pc.bounds.n_h << '\n'
    << "N_eta   " << pc.bounds.n_eta << '\n'
    << "N_deg   " << pc.bounds.n_deg << '\n'
    << "N_iter  " << pc.bounds.n_iter << '\n';
  for (const auto& w : pc.warnings) io.err << "warning: " << w << '\n';
  return kOk;
}

int cmd_encode(const Common& c, const std::string& msg, int errors, std::uint64_t seed, Io& io) {
  const auto pc = load(c, io);
  const Field& F = pc.code.field;
  auto word = encode(read_vector(msg, F, io), pc.code, pc.encoder);
  if (errors > 0) {
    if (errors > pc.n()) throw DimensionError("--errors exceeds the code length");
    auto rng = trial_rng(seed, 0);
    std::vector<std::size_t> pos(word.size());
    for (std::size_t t = 0; t < pos.size(); ++t) pos[t] = t;
    for (int j = 0; j < errors; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      std::swap(pos[ju], pos[ju + uniform_below(rng, pos.size() - ju)]);
      const Elem e{static_cast<std::uint32_t>(1 + uniform_below(rng, F.size() - 1))};
      word[pos[ju]] = F.add(word[pos[ju]], e);
    }
  }
  if (c.format == "json") {
    io.out << json{{"codeword", elems_json(word, F)}}.dump() << '\n';
  } else {
    io.out << format_vector(word, F) << '\n';
  }
  return kOk;
}

int cmd_decode(const Common& c, const std::string& vec, bool trace, bool verify, Io& io) {
  const auto pc = load(c, io);
  const Field& F = pc.code.field;
  const auto v = read_vector(vec, F, io);
  const auto res = decode(v, pc, DecodeOptions{trace, CheckLevel::sampled});
  if (c.format == "json") {
    json j;
    j["message"] = elems_json(res.message, F);
    j["codeword"] = elems_json(res.codeword, F);
    j["verified"] = res.verified;
    j["residual_weight"] = res.residual_weight;
    j["start_s"] = res.start_s;
    j["iterations"] = res.iterations;
    j["max_poly_degree"] = res.max_poly_degree;
    j["tie"] = res.tie_flag;
    if (trace) {
      j["trace"] = json::array();
      for (const auto& step : res.trace) j["trace"].push_back(format_trace_step(step, F));
    }
    io.out << j.dump(2) << '\n';
  } else {
    if (trace) {
      for (const auto& step : res.trace) io.out << format_trace_step(step, F) << '\n';
    }
    io.out << "message  " << format_vector(res.message, F) << '\n'
           << "codeword " << format_vector(res.codeword, F) << '\n'
           << "verified " << (res.verified ? "true" : "false") << '\n'
           << "errors   " << res.residual_weight << '\n'
           << "N        " << res.start_s << '\n'
           << "iterations " << res.iterations << '\n';
    if (res.tie_flag) io.out << "tie      true\n";
  }
  return verify && !res.verified ? kFailed : kOk;
}

int cmd_simulate(const Common& c, const SimOptions& so, bool timing, Io& io) {
  const auto pc = load(c, io);
  const auto rep = simulate(pc, so);
  if (c.format == "json") {
    json j;
    j["trials"] = rep.trials;
    j["error_weight"] = rep.error_weight;
    j["successes"] = rep.successes;
    j["failures"] = rep.failures;
    j["ties"] = rep.ties;
    j["max_iterations"] = rep.max_iterations;
    j["max_poly_degree"] = rep.max_poly_degree;
    if (timing) j["mean_decode_seconds"] = rep.mean_decode_seconds;
    if (!rep.first_violation.empty()) j["violation"] = rep.first_violation;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << "trials          " << rep.trials << '\n'
           << "error_weight    " << rep.error_weight << '\n'
           << "successes       " << rep.successes << '\n'
           << "failures        " << rep.failures << '\n'
           << "ties            " << rep.ties << '\n'
           << "max_iterations  " << rep.max_iterations << " (N_iter " << pc.bounds.n_iter << ")\n"
           << "max_poly_degree " << rep.max_poly_degree << " (N_deg " << pc.bounds.n_deg << ")\n";
    if (timing) io.out << "mean_decode_seconds " << std::setprecision(6) << rep.mean_decode_seconds << '\n';
    if (!rep.first_violation.empty()) io.out << "violation       " << rep.first_violation << '\n';
  }
  if (!rep.first_violation.empty()) return kViolation;
  return rep.failures > 0 && so.error_weight <= pc.correctable() ? kFailed : kOk;
}

// Half of the vectors are uniform over F^n, the rest are codewords with
// errors of weight up to the decoding radius.
int cmd_selftest(const Common& c, int trials, std::uint64_t seed, Io& io) {
  const auto pc = load(c, io);
  const Field& F = pc.code.field;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Elem> v;
    if (t % 2 == 0) {
      auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
      v.resize(static_cast<std::size_t>(pc.n()));
      for (auto& e : v) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, F.size()))};
    } else {
      SimOptions so;
      so.seed = seed;
      so.error_weight = (t / 2) % (pc.correctable() + 1);
      v = run_trial(pc, so, static_cast<std::uint64_t>(t)).received;
    }
    try {
      const auto res = decode(v, pc, DecodeOptions{false, CheckLevel::every});
      if (t % 2 == 1 && !res.verified) {
        ++failures;
        io.err << "vector " << t << ": decode within the radius not verified\n";
      }
    } catch (const InvariantViolation& e) {
      ++failures;
      io.err << "vector " << t << ": " << e.what() << '\n';
    }
  }
  for (const auto& w : pc.warnings) io.err << "warning: " << w << '\n';
  if (c.format == "json") {
    io.out << json{{"vectors", trials}, {"failures", failures}}.dump() << '\n';
  } else {
    io.out << "selftest " << trials << " vectors, " << failures << " failures\n";
  }
  return failures == 0 ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interpolation-based unique decoder for AG codes"};
  app.name(args.empty() ? "agdec" : args.front());
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("code-file", common.code_file, "curve-data file ('-' for stdin)")->required();
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--cache", common.cache, "use/write the <file>.pre.json precomputation sidecar");
  };

  auto* info = app.add_subcommand("info", "code parameters, nu(s) table, d_LO and complexity bounds");
  add_common(info);

  std::string vec;
  int errors = 0;
  std::uint64_t seed = 1;
  auto* enc = app.add_subcommand("encode", "encode a message, optionally adding a random error");
  add_common(enc);
  enc->add_option("message", vec, "comma-separated elements ('-' for stdin)")->required();
  enc->add_option("--errors", errors, "add a random error of this weight")->check(CLI::NonNegativeNumber);
  enc->add_option("--seed", seed, "RNG seed for --errors");

  bool trace = false, verify = false;
  auto* dec = app.add_subcommand("decode", "decode a received vector");
  add_common(dec);
  dec->add_option("received", vec, "comma-separated elements ('-' for stdin)")->required();
  dec->add_flag("--trace", trace, "print one line per iteration");
  dec->add_flag("--verify", verify, "exit 1 unless the result is within the decoding radius");

  SimOptions so;
  bool timing = false;
  std::string checks = "basic";
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo decoding of random errors");
  add_common(sim);
  sim->add_option("--errors", so.error_weight, "error weight t")->required()->check(CLI::NonNegativeNumber);
  sim->add_option("--trials", so.trials, "number of trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", so.seed, "RNG seed");
  sim->add_option("--threads", so.threads, "worker threads")->check(CLI::PositiveNumber);
  sim->add_option("--checks", checks, "invariant checking")->check(CLI::IsMember({"basic", "sampled", "every"}));
  sim->add_flag("--timing", timing, "report mean decode time (not reproducible)");

  int st_trials = 100;
  auto* self = app.add_subcommand("selftest", "invariant suite on random received vectors");
  add_common(self);
  self->add_option("--trials", st_trials, "number of vectors")->check(CLI::PositiveNumber);
  self->add_option("--seed", seed, "RNG seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  Io io{in, out, err};
  try {
    if (*info) return cmd_info(common, io);
    if (*enc) return cmd_encode(common, vec, errors, seed, io);
    if (*dec) return cmd_decode(common, vec, trace, verify, io);
    if (*sim) {
      so.checks = checks == "every" ? CheckLevel::every : checks == "sampled" ? CheckLevel::sampled : CheckLevel::basic;
      return cmd_simulate(common, so, timing, io);
    }
    if (*self) return cmd_selftest(common, st_trials, seed, io);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace agdec::cli
