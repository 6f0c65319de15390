#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "agdec/precompute.hpp"

namespace agdec {

/// Groebner basis B^(s) of the interpolation module I_{v^(s)} under >_s,
/// kept as 2*gamma rows: grows[i] leads in ybar-column i, frows[i] in
/// y_i z-column i.
struct DecoderState {
  int s = 0;
  std::vector<ModuleRow> grows;
  std::vector<ModuleRow> frows;
  /// nu[i] = LC(grows[i].w[i])
  std::vector<Elem> nu;
  /// w_s collected so far, keyed by s.
  std::map<int, Elem> message;
  /// v^(s) = v - sum_{s' > s} ev(w_{s'} phi_{s'}); only used by the
  /// membership check.
  std::vector<Elem> residual;
};

struct PairingEntry {
  int iprime = 0;
  int k = 0;
  int c = 0;
  int cbar = 0;
  Elem wi{};
  Elem mui{};
};

struct PairingData {
  std::vector<PairingEntry> entries;  // indexed by i
};

struct Vote {
  Elem w{};
  bool tie = false;
};

struct TraceStep {
  int s = 0;
  int phase = 1;
  std::vector<PairingEntry> entries;
  Elem winner{};
};

enum class CheckLevel {
  /// Gröbner criterion after each rebasing only.
  basic,
  /// Full invariant suite at the initial and final state.
  sampled,
  /// Full invariant suite after every iteration.
  every,
};

struct DecodeOptions {
  bool trace = false;
  CheckLevel checks = CheckLevel::sampled;
};

struct DecodeResult {
  std::vector<Elem> message;   // ordered by s_0 < ... < s_{k-1}
  std::vector<Elem> codeword;  // encode(message)
  int residual_weight = 0;     // wt(v - codeword)
  bool verified = false;       // residual_weight <= floor((d_LO - 1) / 2)
  int iterations = 0;
  bool tie_flag = false;
  int start_s = 0;             // N
  int max_poly_degree = 0;
  std::vector<TraceStep> trace;
};

/// s = N = delta(h_v); grows[i] = eta_i, frows[i] = y_i z - y_i h_v.
/// For v = 0, N = 0.
DecoderState init_state(std::span<const Elem> v, const PrecomputedCode& pc);

/// i' = (i + s) mod gamma, k_i = deg(a_ii) + (a_i + s - b_{i'}) / gamma,
/// c_i = deg(d_{i'i'}) - k_i. Leaves w_i and mu_i for voting().
PairingData pairing(const DecoderState& st, const CodeData& code);

bool is_first_phase(int s, const CodeData& code);

/// Fills w_i, mu_i in `pd` and elects w. First phase: w = 0. Second phase:
/// weighted majority over {w_i} and 0 with weights cbar_i; ties go to the
/// candidate with the smallest digit vector and set `tie`.
Vote voting(const DecoderState& st, PairingData& pd, const PrecomputedCode& pc);

/// Substitutes z -> z + w phi_s and updates the rows so they form a Gröbner
/// basis under >_{s-1}; records w_s in the second phase and decrements s.
void rebasing(DecoderState& st, const PairingData& pd, Elem w, const PrecomputedCode& pc);

/// Gröbner criterion, degree identity (sum = n), membership, nu consistency
/// and the N_deg envelope. Throws InvariantViolation.
void check_invariants(const DecoderState& st, const PrecomputedCode& pc);
void check_groebner(const DecoderState& st, const PrecomputedCode& pc);

DecodeResult decode(std::span<const Elem> v, const PrecomputedCode& pc, const DecodeOptions& opts = {});

/// `s=<int> phase=<1|2> [i=.. i'=.. c=.. w_i=<elem>]*gamma winner=<elem>`
std::string format_trace_step(const TraceStep& step, const Field& F);

}  // namespace agdec
