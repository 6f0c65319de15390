#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agdec/code.hpp"

namespace agdec {

/// Monomial x^xdeg ybar_col of Rbar.
struct Monomial {
  int col = 0;
  int xdeg = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct KernelBasis {
  /// eta[i] is monic with leading monomial in column i; its other terms are
  /// footprint monomials.
  std::vector<RBarElement> eta;
  /// The n monomials of Rbar with linearly independent evaluations, in
  /// increasing delta.
  std::vector<Monomial> footprint;
};

/// Groebner basis of the kernel J of ev, by ordered elimination over the
/// evaluation vectors of the monomials of Rbar (FGLM style).
KernelBasis compute_eta(const CodeData& code);

/// h_1..h_n with ev(h_i) = e_i, expressed over the footprint monomials.
std::vector<RBarElement> compute_lagrange(const CodeData& code, std::span<const Monomial> footprint);

struct RadiusBound {
  std::map<int, int> nu;  // s -> nu(s) for s in the message support
  int d_lo = 0;
};

/// nu(s) = (1/gamma) sum_i max(delta(eta_{i'}) - a_i - s, 0), i' = (i+s) mod gamma,
/// and d_LO = min nu(s) over the message support.
RadiusBound compute_dlo(const CodeData& code, std::span<const int> eta_lead_xdeg);

struct ComplexityBounds {
  int n_h = 0;     // floor((n + 2g - 1) / gamma)
  int n_eta = 0;   // floor((n + g) / gamma)
  int n_deg = 0;   // 1 + floor((n + 4g - 2) / gamma) for g > 0, n for g = 0
  int n_iter = 0;  // n + 2g
};

ComplexityBounds complexity_bounds(const CodeData& code);

/// Everything the decoder needs before a received word arrives. Immutable
/// after construction; share it read-only between decodes.
struct PrecomputedCode {
  explicit PrecomputedCode(CodeData c) : code(std::move(c)) {}

  CodeData code;
  std::vector<RBarElement> eta;
  std::vector<Monomial> footprint;
  std::vector<RBarElement> lagrange;
  EncoderBasis encoder;
  std::vector<int> eta_lead_xdeg;
  std::map<int, int> nu_table;
  int d_lo = 0;
  ComplexityBounds bounds;
  /// LC(y_i * ybar_m) at its leading monomial, [i][m].
  std::vector<std::vector<Elem>> table_lc;
  /// Soft-check failures (e.g. a Lagrange degree above N_h).
  std::vector<std::string> warnings;

  int k() const noexcept { return static_cast<int>(encoder.support.size()); }
  int n() const noexcept { return code.n; }
  int correctable() const noexcept { return (d_lo - 1) / 2; }
};

PrecomputedCode precompute(CodeData code);

/// h_v = sum_t v_t h_t, so that ev(h_v) = v.
RBarElement compute_hv(std::span<const Elem> v, const PrecomputedCode& pc);

/// 64-bit FNV-1a over the bytes of a curve-data file; keys the cache.
std::uint64_t content_hash(std::string_view bytes);

/// Cache document: key, eta, footprint, lagrange, encoder, nu_table, d_lo.
std::string serialize_precomputed(const PrecomputedCode& pc, std::uint64_t key);
/// Returns nullopt when the document's key does not match.
std::optional<PrecomputedCode> parse_precomputed(std::string_view json_text, CodeData code, std::uint64_t key);

/// Loads curve data from `path`, using the sidecar `<path>.pre.json` when
/// `use_cache` is set (written on a miss).
PrecomputedCode load_precomputed(const std::filesystem::path& path, bool use_cache = false);

std::filesystem::path cache_path_for(const std::filesystem::path& code_file);

}  // namespace agdec
