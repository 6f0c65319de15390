#include "agdec/decoder.hpp"

#include <algorithm>
#include <sstream>

#include "agdec/errors.hpp"

namespace agdec {

namespace {

int floor_mod(int s, int g) {
  const int r = s % g;
  return r < 0 ? r + g : r;
}

// z -> z + w x^k ybar_m: the w-part gains w x^k sum_j u_j (y_j ybar_m).
void substitute(ModuleRow& row, Elem w, const PhiIndex& phi, const CodeData& code) {
  const Field& F = code.field;
  const auto m = static_cast<std::size_t>(phi.m);
  for (std::size_t j = 0; j < row.u.size(); ++j) {
    const auto uc = row.u[j].coeffs();
    if (uc.empty()) continue;
    const auto& entry = code.table[j][m];
    for (std::size_t l = 0; l < entry.c.size(); ++l) {
      const Poly& t = entry.c[l];
      if (t.is_zero()) continue;
      for (std::size_t d = 0; d < uc.size(); ++d) {
        if (uc[d].is_zero()) continue;
        row.w[l].axpy(F, t, F.mul(w, uc[d]), phi.k + static_cast<int>(d));
      }
    }
  }
}

bool digits_less(const Field& F, Elem x, Elem y) { return F.digits(x) < F.digits(y); }

int max_degree(const DecoderState& st) {
  int d = -1;
  for (const auto& r : st.grows) d = std::max(d, r.max_degree());
  for (const auto& r : st.frows) d = std::max(d, r.max_degree());
  return d;
}

}  // namespace

bool is_first_phase(int s, const CodeData& code) { return s > 0 || !in_rbar_semigroup(s, code); }

DecoderState init_state(std::span<const Elem> v, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const Field& F = code.field;
  const auto G = static_cast<std::size_t>(code.gamma);
  const RBarElement hv = compute_hv(v, pc);

  DecoderState st;
  st.s = hv.is_zero() ? 0 : rbar_delta(hv, code);
  st.grows.reserve(G);
  st.frows.reserve(G);
  for (std::size_t i = 0; i < G; ++i) {
    ModuleRow g(G);
    g.w = pc.eta[i].c;
    st.grows.push_back(std::move(g));

    ModuleRow f(G);
    f.u[i] = Poly::constant(F.one());
    RBarElement yh = mul_y(static_cast<int>(i), hv, code);
    for (std::size_t j = 0; j < G; ++j) f.w[j] = scale(F, yh.c[j], F.neg(F.one()));
    st.frows.push_back(std::move(f));

    st.nu.push_back(pc.eta[i].c[i].lc());
  }
  for (int s : pc.encoder.support) {
    if (s > st.s) st.message[s] = F.zero();
  }
  st.residual.assign(v.begin(), v.end());
  return st;
}

PairingData pairing(const DecoderState& st, const CodeData& code) {
  const int gamma = code.gamma;
  PairingData pd;
  pd.entries.resize(static_cast<std::size_t>(gamma));
  for (int i = 0; i < gamma; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    auto& e = pd.entries[ii];
    e.iprime = floor_mod(i + st.s, gamma);
    const int diff = code.a[ii] + st.s - code.b[static_cast<std::size_t>(e.iprime)];
    if (floor_mod(diff, gamma) != 0) {
      throw InvariantViolation(st.s, "pairing divisibility", "a_i + s - b_i' not divisible by gamma");
    }
    const Poly& aii = st.frows[ii].u[ii];
    const Poly& dpp = st.grows[static_cast<std::size_t>(e.iprime)].w[static_cast<std::size_t>(e.iprime)];
    if (aii.is_zero() || dpp.is_zero()) throw InvariantViolation(st.s, "pairing", "vanishing diagonal entry");
    e.k = aii.deg() + (diff >= 0 ? diff / gamma : -(-diff / gamma));
    e.c = dpp.deg() - e.k;
    e.cbar = std::max(e.c, 0);
  }
  return pd;
}

Vote voting(const DecoderState& st, PairingData& pd, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const Field& F = code.field;
  const bool first = is_first_phase(st.s, code);
  const PhiIndex phi = phi_of(st.s, code);

  for (std::size_t i = 0; i < pd.entries.size(); ++i) {
    auto& e = pd.entries[i];
    const Poly& bii = st.frows[i].w[static_cast<std::size_t>(e.iprime)];
    if (first) {
      e.mui = F.one();
      e.wi = e.k >= 0 ? F.neg(bii.coeff(e.k)) : F.zero();
    } else {
      e.mui = F.mul(st.frows[i].u[i].lc(), pc.table_lc[i][static_cast<std::size_t>(phi.m)]);
      e.wi = F.div(F.neg(bii.coeff(e.k)), e.mui);
    }
  }
  if (first) return Vote{F.zero(), false};

  std::vector<std::pair<Elem, int>> tally{{F.zero(), 0}};
  for (const auto& e : pd.entries) {
    auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& p) { return p.first == e.wi; });
    if (it == tally.end()) {
      tally.emplace_back(e.wi, e.cbar);
    } else {
      it->second += e.cbar;
    }
  }
  int best = -1;
  for (const auto& [_, votes] : tally) best = std::max(best, votes);
  Vote vote;
  bool found = false;
  int winners = 0;
  for (const auto& [cand, votes] : tally) {
    if (votes != best) continue;
    ++winners;
    if (!found || digits_less(F, cand, vote.w)) vote.w = cand;
    found = true;
  }
  vote.tie = winners > 1;
  return vote;
}

void rebasing(DecoderState& st, const PairingData& pd, Elem w, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const Field& F = code.field;
  const bool first = is_first_phase(st.s, code);
  const PhiIndex phi = phi_of(st.s, code);

  if (!first && !w.is_zero()) {
    for (auto& r : st.grows) substitute(r, w, phi, code);
    for (auto& r : st.frows) substitute(r, w, phi, code);
  }

  const std::vector<ModuleRow> hat_g = st.grows;
  const std::vector<Elem> old_nu = st.nu;
  std::vector<Elem> expected_nu = st.nu;

  for (std::size_t i = 0; i < pd.entries.size(); ++i) {
    const auto& e = pd.entries[i];
    const auto ip = static_cast<std::size_t>(e.iprime);
    if (e.wi == w) continue;
    const Elem delta = F.mul(e.mui, F.sub(w, e.wi));
    const Elem coef = F.neg(F.div(delta, old_nu[ip]));
    if (e.c > 0) {
      st.grows[ip] = st.frows[i];
      row_shift_inplace(st.frows[i], e.c);
      row_axpy_inplace(F, st.frows[i], hat_g[ip], coef, 0);
      expected_nu[ip] = delta;
    } else {
      row_axpy_inplace(F, st.frows[i], hat_g[ip], coef, -e.c);
    }
  }

  for (std::size_t i = 0; i < st.nu.size(); ++i) {
    const Elem lc = st.grows[i].w[i].lc();
    if (lc != expected_nu[i]) {
      throw InvariantViolation(st.s, "nu update", "LC(d_ii) disagrees with the incremental rule at i=" +
                                                      std::to_string(i));
    }
    st.nu[i] = lc;
  }

  if (!first) {
    st.message[st.s] = w;
    if (!w.is_zero()) {
      const auto& sup = pc.encoder.support;
      const auto idx = static_cast<std::size_t>(std::lower_bound(sup.begin(), sup.end(), st.s) - sup.begin());
      const auto& row = pc.encoder.rows[idx];
      for (std::size_t t = 0; t < st.residual.size(); ++t) {
        st.residual[t] = F.sub(st.residual[t], F.mul(w, row[t]));
      }
    }
  }
  --st.s;
}

void check_groebner(const DecoderState& st, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const auto wt = code.weights();
  for (int i = 0; i < code.gamma; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    if (st.grows[ii].is_zero() || st.frows[ii].is_zero()) {
      throw InvariantViolation(st.s, "groebner criterion", "zero row at i=" + std::to_string(i));
    }
    const auto lg = row_leading(st.grows[ii], st.s, wt);
    if (lg.has_z || lg.col != i) {
      throw InvariantViolation(st.s, "groebner criterion", "g_" + std::to_string(i) + " does not lead in ybar_" +
                                                              std::to_string(i));
    }
    const auto lf = row_leading(st.frows[ii], st.s, wt);
    if (!lf.has_z || lf.col != i) {
      throw InvariantViolation(st.s, "groebner criterion", "f_" + std::to_string(i) + " does not lead in y_" +
                                                              std::to_string(i) + " z");
    }
  }
}

void check_invariants(const DecoderState& st, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const Field& F = code.field;
  check_groebner(st, pc);

  int degsum = 0;
  for (std::size_t i = 0; i < st.grows.size(); ++i) degsum += st.frows[i].u[i].deg() + st.grows[i].w[i].deg();
  if (degsum != code.n) {
    throw InvariantViolation(st.s, "degree identity", "sum of diagonal degrees is " + std::to_string(degsum));
  }

  for (std::size_t i = 0; i < st.nu.size(); ++i) {
    if (st.nu[i] != st.grows[i].w[i].lc()) throw InvariantViolation(st.s, "nu consistency", "");
  }

  if (max_degree(st) > pc.bounds.n_deg) {
    throw InvariantViolation(st.s, "degree envelope", "polynomial degree above N_deg");
  }

  auto member = [&](const ModuleRow& r) {
    for (int t = 0; t < code.n; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      const Elem xt = code.ev_x[ti];
      Elem acc{};
      for (std::size_t j = 0; j < r.u.size(); ++j) {
        if (!r.u[j].is_zero()) {
          acc = F.add(acc, F.mul(F.mul(eval(F, r.u[j], xt), code.ev_y[j][ti]), st.residual[ti]));
        }
        if (!r.w[j].is_zero()) acc = F.add(acc, F.mul(eval(F, r.w[j], xt), code.ev_ybar[j][ti]));
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < st.grows.size(); ++i) {
    if (!member(st.grows[i])) throw InvariantViolation(st.s, "membership", "g_" + std::to_string(i));
    if (!member(st.frows[i])) throw InvariantViolation(st.s, "membership", "f_" + std::to_string(i));
  }
}

DecodeResult decode(std::span<const Elem> v, const PrecomputedCode& pc, const DecodeOptions& opts) {
  const CodeData& code = pc.code;
  if (v.size() != static_cast<std::size_t>(code.n)) {
    throw DimensionError("received word has length " + std::to_string(v.size()) + ", code length is " +
                         std::to_string(code.n));
  }
  for (auto e : v) code.field.check(e);
  const auto& support = pc.encoder.support;
  const int s0 = support.front();

  DecoderState st = init_state(v, pc);
  DecodeResult res;
  res.start_s = st.s;
  res.max_poly_degree = max_degree(st);
  if (opts.checks != CheckLevel::basic) check_invariants(st, pc);

  while (st.s >= s0) {
    PairingData pd = pairing(st, code);
    const Vote vote = voting(st, pd, pc);
    res.tie_flag = res.tie_flag || vote.tie;
    if (opts.trace) {
      res.trace.push_back(TraceStep{st.s, is_first_phase(st.s, code) ? 1 : 2, pd.entries, vote.w});
    }
    rebasing(st, pd, vote.w, pc);
    ++res.iterations;
    res.max_poly_degree = std::max(res.max_poly_degree, max_degree(st));
    if (opts.checks == CheckLevel::every) {
      check_invariants(st, pc);
    } else {
      check_groebner(st, pc);
    }
  }
  if (opts.checks == CheckLevel::sampled) check_invariants(st, pc);

  if (res.iterations > pc.bounds.n_iter) {
    throw InvariantViolation(st.s, "iteration envelope", std::to_string(res.iterations) + " > N_iter");
  }
  if (res.max_poly_degree > pc.bounds.n_deg) {
    throw InvariantViolation(st.s, "degree envelope", std::to_string(res.max_poly_degree) + " > N_deg");
  }

  res.message.reserve(support.size());
  for (int s : support) res.message.push_back(st.message.at(s));
  res.codeword = encode(res.message, code, pc.encoder);
  for (std::size_t t = 0; t < res.codeword.size(); ++t) {
    if (res.codeword[t] != v[t]) ++res.residual_weight;
  }
  res.verified = res.residual_weight <= pc.correctable();
  return res;
}

std::string format_trace_step(const TraceStep& step, const Field& F) {
  std::ostringstream os;
  os << "s=" << step.s << " phase=" << step.phase;
  for (std::size_t i = 0; i < step.entries.size(); ++i) {
    const auto& e = step.entries[i];
    os << " i=" << i << " i'=" << e.iprime << " c=" << e.c << " w_i=" << F.format(e.wi);
  }
  os << " winner=" << F.format(step.winner);
  return os.str();
}

}  // namespace agdec
