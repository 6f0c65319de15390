// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "agdec/code_io.hpp"
#include "agdec/decoder.hpp"
#include "agdec/errors.hpp"
#include "agdec/simulate.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace agdec;
using agdec::testing::fixture;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::ostringstream why;

  // Records the first few mismatches.
  template <class T, class U>
  void eq(const T& got, const U& want, const std::string& what) {
    if (got == want) return;
    fail(what);
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    if (ok) {
      why << what;
    } else if (why.tellp() < 300) {
      why << "; " << what;
    }
    ok = false;
  }
};

int failures = 0;

void report(const char* name, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  if (c.ok) {
    std::printf("PASS  %-28s %s\n", name, detail.c_str());
  } else {
    ++failures;
    std::printf("FAIL  %-28s %s\n", name, c.why.str().c_str());
  }
  std::fflush(stdout);
}

const char* const kFixtures[] = {"hermitian_f9_26.json", "klein_f8_q1.json", "klein_f8_q2.json", "rs_f64_63.json",
                                 "rs_f8_7.json"};

std::map<std::string, PrecomputedCode>& codes() {
  static std::map<std::string, PrecomputedCode> m;
  return m;
}

const PrecomputedCode& code(const std::string& name) {
  auto it = codes().find(name);
  if (it == codes().end()) it = codes().emplace(name, precompute(load_code_file(fixture(name)))).first;
  return it->second;
}

void check_nu(Check& c, const PrecomputedCode& pc, const std::map<int, int>& want) {
  for (const auto& [s, nu] : want) {
    const auto it = pc.nu_table.find(s);
    if (it == pc.nu_table.end()) {
      c.fail("nu(" + std::to_string(s) + ") missing");
    } else {
      c.eq(it->second, nu, "nu(" + std::to_string(s) + ") = " + std::to_string(it->second));
    }
  }
  c.eq(pc.nu_table.size(), want.size(), "nu table has " + std::to_string(pc.nu_table.size()) + " entries");
}

// (x^hi - x^lo) ybar_i on the diagonal, zero elsewhere
void check_eta(Check& c, const PrecomputedCode& pc, const std::vector<std::pair<int, int>>& want, const char* tag) {
  const Field& F = pc.code.field;
  for (std::size_t i = 0; i < want.size(); ++i) {
    for (std::size_t j = 0; j < want.size(); ++j) {
      const Poly expect = i == j ? agdec::testing::poly_of(F, {{F.one(), want[i].first}, {F.from_int(-1), want[i].second}})
                                 : Poly();
      c.eq(pc.eta[i].c[j], expect, std::string(tag) + " eta_" + std::to_string(i) + "[" + std::to_string(j) + "]");
    }
  }
}

std::vector<Elem> random_word(const PrecomputedCode& pc, std::uint64_t seed, std::uint64_t t) {
  auto rng = trial_rng(seed, t);
  std::vector<Elem> v(static_cast<std::size_t>(pc.n()));
  for (auto& e : v) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, pc.code.field.size()))};
  return v;
}

}  // namespace

int main() {
  report("hermitian-nu-table", [](Check& c) {
    const auto t0 = Clock::now();
    const auto& pc = code("hermitian_f9_26.json");
    const double dt = seconds_since(t0);
    check_nu(c, pc,
             {{0, 9}, {-1, 10}, {-2, 11}, {-3, 12}, {-4, 13}, {-5, 14}, {-6, 15}, {-7, 16}, {-8, 17}, {-9, 18},
              {-10, 19}, {-11, 20}, {-12, 21}, {-14, 23}, {-15, 24}});
    c.eq(pc.d_lo, 9, "d_LO = " + std::to_string(pc.d_lo));
    c.eq(pc.k(), 15, "k = " + std::to_string(pc.k()));
    c.expect(dt < 1.0, "load + precompute took " + std::to_string(dt) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "d_LO=9 k=15, 15 entries, %.3f s", dt);
    return std::string(buf);
  });

  report("hermitian-golden-trace", [](Check& c) {
    const auto& pc = code("hermitian_f9_26.json");
    const Field& F = pc.code.field;
    const auto res = decode(agdec::testing::hermitian_received(F), pc, DecodeOptions{true, CheckLevel::every});
    c.eq(res.start_s, 11, "N = " + std::to_string(res.start_s));
    const auto& first = res.trace.at(0);
    c.eq(first.s, 11, "first iteration s");
    const int ip[3] = {2, 0, 1}, ci[3] = {2, -2, -2};
    for (std::size_t i = 0; i < 3; ++i) {
      c.eq(first.entries[i].iprime, ip[i], "s=11 i'_" + std::to_string(i));
      c.eq(first.entries[i].c, ci[i], "s=11 c_" + std::to_string(i));
      c.eq(first.entries[i].wi, F.from_power(7), "s=11 w_" + std::to_string(i));
    }
    std::vector<const TraceStep*> second;
    for (const auto& st : res.trace)
      if (st.phase == 2) second.push_back(&st);
    const auto& blocks = agdec::testing::hermitian_second_phase();
    c.eq(second.size(), blocks.size(), "second-phase iterations: " + std::to_string(second.size()));
    for (std::size_t b = 0; b < std::min(second.size(), blocks.size()); ++b) {
      const std::string at = "s=" + std::to_string(blocks[b].s);
      c.eq(second[b]->s, blocks[b].s, at + " order");
      c.eq(second[b]->winner, F.zero(), at + " winner");
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& want = blocks[b].rows[i];
        const auto& got = second[b]->entries[i];
        c.eq(got.iprime, want.iprime, at + " i'_" + std::to_string(i));
        c.eq(got.c, want.c, at + " c_" + std::to_string(i));
        c.eq(got.wi, want.w_power < 0 ? F.zero() : F.from_power(want.w_power), at + " w_" + std::to_string(i));
      }
    }
    c.eq(res.message, std::vector<Elem>(message_support(pc.code).size(), F.zero()), "message not all-zero");
    c.eq(res.message.size(), std::size_t{15}, "message length");
    c.expect(res.verified, "not verified");
    return "N=11, s=11 pairing, 15 voting blocks, zero message of length 15, verified";
  });

  report("eta-golden", [](Check& c) {
    check_eta(c, code("hermitian_f9_26.json"), {{8, 0}, {9, 1}, {9, 1}}, "hermitian");
    check_eta(c, code("klein_f8_q1.json"), {{7, 0}, {7, 0}, {8, 1}}, "klein Q1");
    check_eta(c, code("klein_f8_q2.json"), {{8, 1}, {7, 0}, {7, 0}}, "klein Q2");
    std::string sums;
    for (const char* f : kFixtures) {
      const auto& pc = code(f);
      int sum = 0;
      for (int d : pc.eta_lead_xdeg) sum += d;
      c.eq(sum, pc.n(), std::string(f) + ": sum of eta lead degrees " + std::to_string(sum));
      sums += (sums.empty() ? "" : " ") + std::to_string(sum) + "/" + std::to_string(pc.n());
    }
    return "hermitian, klein Q1, klein Q2 exact; lead-degree sums " + sums;
  });

  report("klein-q-sensitivity", [](Check& c) {
    const auto& q1 = code("klein_f8_q1.json");
    const auto& q2 = code("klein_f8_q2.json");
    c.eq(q1.d_lo, 5, "Q1 d_LO = " + std::to_string(q1.d_lo));
    c.eq(q2.d_lo, 4, "Q2 d_LO = " + std::to_string(q2.d_lo));
    check_nu(c, q1,
             {{0, 5}, {-1, 5}, {-2, 6}, {-3, 7}, {-4, 8}, {-5, 9}, {-6, 10}, {-7, 11}, {-8, 12}, {-9, 13}, {-10, 14},
              {-11, 15}, {-12, 16}, {-13, 17}, {-14, 18}, {-17, 21}});
    check_nu(c, q2,
             {{0, 4}, {-1, 5}, {-2, 6}, {-3, 7}, {-4, 8}, {-5, 9}, {-6, 10}, {-7, 11}, {-8, 12}, {-9, 13}, {-10, 14},
              {-11, 15}, {-12, 16}, {-13, 17}, {-14, 18}, {-16, 20}});
    return "d_LO 5 (Q1) vs 4 (Q2), both nu tables exact";
  });

  report("rs-roundtrip-bw-oracle", [](Check& c) {
    const auto t0 = Clock::now();
    const auto& pc = code("rs_f64_63.json");
    const Field& F = pc.code.field;
    SimOptions so;
    so.error_weight = 12;
    so.trials = 1000;
    so.seed = 20240601;
    int agree = 0;
    const auto rep = simulate(pc, so, [&](std::uint64_t t, const Trial& tr) {
      std::vector<Elem> ys(tr.received.size());
      for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = F.div(tr.received[i], pc.code.ev_x[i]);
      const auto f = agdec::testing::berlekamp_welch(F, pc.code.ev_x, ys, pc.k());
      if (f && *f == tr.result.message && *f == tr.message) {
        ++agree;
      } else {
        c.fail("trial " + std::to_string(t) + " disagrees with Berlekamp-Welch");
      }
    });
    const double dt = seconds_since(t0);
    c.eq(rep.successes, 1000, "successes = " + std::to_string(rep.successes));
    c.expect(rep.first_violation.empty(), rep.first_violation);
    c.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "1000/1000 decoded, %d/1000 agree with Berlekamp-Welch, %.2f s", agree, dt);
    return std::string(buf);
  });

  report("tiny-code-brute-force", [](Check& c) {
    const auto& pc = code("rs_f8_7.json");
    const Field& F = pc.code.field;
    const int n = pc.n(), k = pc.k(), q = static_cast<int>(F.size());
    const int radius = pc.correctable();
    c.eq(radius, 2, "radius");

    std::vector<std::vector<Elem>> words;
    std::vector<std::vector<Elem>> msgs;
    for (int idx = 0; idx < q * q * q; ++idx) {
      std::vector<Elem> m(static_cast<std::size_t>(k));
      for (int i = 0, r = idx; i < k; ++i, r /= q) m[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(r % q)};
      words.push_back(encode(m, pc.code, pc.encoder));
      msgs.push_back(std::move(m));
    }
    // every error pattern of weight <= radius
    std::vector<std::vector<Elem>> errors{std::vector<Elem>(static_cast<std::size_t>(n), F.zero())};
    for (int a = 0; a < n; ++a) {
      for (int ea = 1; ea < q; ++ea) {
        std::vector<Elem> e(static_cast<std::size_t>(n), F.zero());
        e[static_cast<std::size_t>(a)] = Elem{static_cast<std::uint32_t>(ea)};
        errors.push_back(e);
        for (int b = a + 1; b < n; ++b) {
          for (int eb = 1; eb < q; ++eb) {
            auto e2 = e;
            e2[static_cast<std::size_t>(b)] = Elem{static_cast<std::uint32_t>(eb)};
            errors.push_back(e2);
          }
        }
      }
    }
    long cases = 0;
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (const auto& e : errors) {
        std::vector<Elem> v(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t) v[static_cast<std::size_t>(t)] = F.add(words[w][static_cast<std::size_t>(t)], e[static_cast<std::size_t>(t)]);
        // nearest codeword by exhaustive search
        int best = n + 1, best_idx = -1, ties = 0;
        for (std::size_t u = 0; u < words.size(); ++u) {
          int d = 0;
          for (int t = 0; t < n && d <= best; ++t) d += words[u][static_cast<std::size_t>(t)] != v[static_cast<std::size_t>(t)];
          if (d < best) {
            best = d;
            best_idx = static_cast<int>(u);
            ties = 0;
          } else if (d == best) {
            ++ties;
          }
        }
        const auto res = decode(v, pc, DecodeOptions{false, CheckLevel::basic});
        if (ties != 0 || res.message != msgs[static_cast<std::size_t>(best_idx)]) {
          c.fail("codeword " + std::to_string(w) + " disagrees with exhaustive search");
        }
        ++cases;
      }
    }
    return std::to_string(words.size()) + " codewords x " + std::to_string(errors.size()) +
           " error patterns (weight <= 2) = " + std::to_string(cases) + " decodes, all equal to nearest codeword";
  });

  report("complexity-envelopes", [](Check& c) {
    const std::pair<const char*, int> sims[] = {{"hermitian_f9_26.json", 4}, {"klein_f8_q1.json", 2},
                                                {"klein_f8_q2.json", 1},     {"rs_f64_63.json", 12},
                                                {"rs_f8_7.json", 2}};
    std::string detail;
    for (const auto& [name, t] : sims) {
      const auto& pc = code(name);
      SimOptions so;
      so.error_weight = t;
      so.trials = 1000;
      so.seed = 77;
      so.threads = 4;
      const bool herm = std::string(name) == "hermitian_f9_26.json";
      const int s0 = pc.encoder.support.front();
      const auto rep = simulate(pc, so, [&](std::uint64_t trial, const Trial& tr) {
        const std::string at = std::string(name) + " trial " + std::to_string(trial);
        c.expect(tr.violation.empty(), at + ": " + tr.violation);
        c.expect(tr.result.iterations <= pc.bounds.n_iter, at + " iterations");
        c.expect(tr.result.max_poly_degree <= pc.bounds.n_deg, at + " degree");
        if (herm) {
          c.eq(tr.result.iterations, tr.result.start_s - s0 + 1, at + " iterations != N - s_0 + 1");
          c.expect(tr.result.iterations <= 32, at + " iterations > 32");
        }
      });
      c.eq(rep.successes, so.trials, std::string(name) + " failures");
      detail += std::string(detail.empty() ? "" : ", ") + name + " it " + std::to_string(rep.max_iterations) + "/" +
                std::to_string(pc.bounds.n_iter) + " deg " + std::to_string(rep.max_poly_degree) + "/" +
                std::to_string(pc.bounds.n_deg);
    }
    return detail;
  });

  report("invariant-suite", [](Check& c) {
    long checked = 0;
    for (const char* name : kFixtures) {
      const auto& pc = code(name);
      SimOptions so;
      so.seed = 4242;
      so.checks = CheckLevel::every;
      for (std::uint64_t t = 0; t < 100; ++t) {
        // even: uniform words; odd: codewords plus errors within the radius
        std::vector<Elem> v;
        if (t % 2 == 0) {
          v = random_word(pc, 4242, t);
        } else {
          so.error_weight = static_cast<int>(t / 2) % (pc.correctable() + 1);
          v = run_trial(pc, so, t).received;
        }
        try {
          const auto res = decode(v, pc, DecodeOptions{false, CheckLevel::every});
          checked += res.iterations;
        } catch (const InvariantViolation& e) {
          c.fail(std::string(name) + " vector " + std::to_string(t) + ": " + e.what());
        }
      }
    }
    return "500 vectors, " + std::to_string(checked) +
           " iterations checked (groebner criterion, degree identity, membership)";
  });

  report("dlo-bound", [](Check& c) {
    std::string detail;
    for (const char* name : kFixtures) {
      const auto& pc = code(name);
      const int goppa = pc.n() - pc.code.degG;
      c.expect(pc.d_lo >= goppa, std::string(name) + ": d_LO below n - deg G");
      detail += std::string(detail.empty() ? "" : ", ") + std::to_string(pc.d_lo) + ">=" + std::to_string(goppa);
    }
    const auto& h = code("hermitian_f9_26.json");
    const auto& rs = code("rs_f64_63.json");
    const auto& k1 = code("klein_f8_q1.json");
    c.eq(h.d_lo, h.n() - h.code.degG, "hermitian not tight");
    c.eq(rs.d_lo, rs.n() - rs.code.degG, "rs not tight");
    c.expect(k1.d_lo > k1.n() - k1.code.degG, "klein Q1 not strict");
    return detail + " (equal on hermitian and RS, strict on klein Q1)";
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
