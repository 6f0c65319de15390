#include "agdec/precompute.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "agdec/code_io.hpp"
#include "agdec/errors.hpp"
#include "json_detail.hpp"

namespace agdec {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

int floor_mod(int s, int g) {
  const int r = s % g;
  return r < 0 ? r + g : r;
}

// Row of the incremental echelon form: vec = ev(sum_j combo[j] footprint[j]),
// vec[pivot] == 1, and vec is zero at the pivots of all earlier rows.
struct EchelonRow {
  std::vector<Elem> vec;
  std::vector<Elem> combo;
  std::size_t pivot = 0;
};

RBarElement from_footprint(const CodeData& code, std::span<const Monomial> foot, std::span<const Elem> coeffs) {
  std::vector<std::vector<Elem>> cols(static_cast<std::size_t>(code.gamma));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    auto& col = cols[static_cast<std::size_t>(foot[j].col)];
    const auto k = static_cast<std::size_t>(foot[j].xdeg);
    if (col.size() <= k) col.resize(k + 1);
    col[k] = code.field.add(col[k], coeffs[j]);
  }
  RBarElement f;
  for (auto& c : cols) f.c.emplace_back(std::move(c));
  return f;
}

}  // namespace

KernelBasis compute_eta(const CodeData& code) {
  const Field& F = code.field;
  const int gamma = code.gamma;
  const auto n = static_cast<std::size_t>(code.n);
  const auto bounds = complexity_bounds(code);
  const int lo = *std::min_element(code.b.begin(), code.b.end());
  const int hi = gamma * (bounds.n_eta + 1) + *std::max_element(code.b.begin(), code.b.end());

  KernelBasis out;
  out.eta.resize(static_cast<std::size_t>(gamma));
  std::vector<bool> done(static_cast<std::size_t>(gamma), false);
  int remaining = gamma;
  std::vector<EchelonRow> rows;

  for (int s = lo; remaining > 0; ++s) {
    if (s > hi) throw MalformedCode("kernel basis not complete below weight " + std::to_string(hi));
    const auto phi = phi_of(s, code);
    const auto m = static_cast<std::size_t>(phi.m);
    if (!phi.in_semigroup() || done[m]) continue;

    std::vector<Elem> vec = eval_rbar(rbar_monomial(code, phi.m, phi.k), code);
    std::vector<Elem> combo(out.footprint.size() + 1);
    combo.back() = F.one();
    for (const auto& r : rows) {
      const Elem c = vec[r.pivot];
      if (c.is_zero()) continue;
      const Elem nc = F.neg(c);
      for (std::size_t t = 0; t < n; ++t) vec[t] = F.add(vec[t], F.mul(nc, r.vec[t]));
      for (std::size_t j = 0; j < r.combo.size(); ++j) combo[j] = F.add(combo[j], F.mul(nc, r.combo[j]));
    }
    const auto piv = std::find_if(vec.begin(), vec.end(), [](Elem e) { return !e.is_zero(); });
    if (piv == vec.end()) {
      // ev(phi + sum combo_j foot_j) = 0 with phi leading
      combo.pop_back();
      RBarElement eta = from_footprint(code, out.footprint, combo);
      eta.c[m].axpy(F, Poly::monomial(F.one(), phi.k), F.one());
      out.eta[m] = std::move(eta);
      done[m] = true;
      --remaining;
      continue;
    }
    const auto pivot = static_cast<std::size_t>(piv - vec.begin());
    const Elem inv = F.inv(vec[pivot]);
    for (auto& e : vec) e = F.mul(inv, e);
    for (auto& e : combo) e = F.mul(inv, e);
    out.footprint.push_back(Monomial{phi.m, phi.k});
    rows.push_back(EchelonRow{std::move(vec), std::move(combo), pivot});
    if (out.footprint.size() > n) throw MalformedCode("more than n independent monomials");
  }
  if (out.footprint.size() != n) {
    throw MalformedCode("footprint has " + std::to_string(out.footprint.size()) + " monomials, expected n = " +
                        std::to_string(n));
  }
  return out;
}

std::vector<RBarElement> compute_lagrange(const CodeData& code, std::span<const Monomial> footprint) {
  const Field& F = code.field;
  const auto n = static_cast<std::size_t>(code.n);
  if (footprint.size() != n) throw MalformedCode("footprint size differs from n");

  // [E | I] -> [I | E^{-1}] with E[j][t] = foot_j(P_t). Row i of E^{-1}
  // gives h_i since sum_j Einv[i][j] E[j] = e_i.
  std::vector<std::vector<Elem>> E(n), inv(n, std::vector<Elem>(n));
  for (std::size_t j = 0; j < n; ++j) {
    E[j] = eval_rbar(rbar_monomial(code, footprint[j].col, footprint[j].xdeg), code);
  }
  // transpose so that we solve for rows: work on M = E^T, then Einv = (M^{-1})^T
  std::vector<std::vector<Elem>> M(n, std::vector<Elem>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < n; ++t) M[t][j] = E[j][t];
    inv[j][j] = F.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && M[r][c].is_zero()) ++r;
    if (r == n) throw MalformedCode("footprint evaluation matrix is singular");
    std::swap(M[r], M[c]);
    std::swap(inv[r], inv[c]);
    const Elem pinv = F.inv(M[c][c]);
    for (std::size_t k = 0; k < n; ++k) {
      M[c][k] = F.mul(pinv, M[c][k]);
      inv[c][k] = F.mul(pinv, inv[c][k]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c].is_zero()) continue;
      const Elem f = F.neg(M[i][c]);
      for (std::size_t k = 0; k < n; ++k) {
        M[i][k] = F.add(M[i][k], F.mul(f, M[c][k]));
        inv[i][k] = F.add(inv[i][k], F.mul(f, inv[c][k]));
      }
    }
  }
  // inv = (E^T)^{-1}; h_i uses column i of it: coefficients inv[j][i]
  std::vector<RBarElement> h;
  h.reserve(n);
  std::vector<Elem> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = inv[j][i];
    h.push_back(from_footprint(code, footprint, coeffs));
  }
  return h;
}

RadiusBound compute_dlo(const CodeData& code, std::span<const int> eta_lead_xdeg) {
  const int gamma = code.gamma;
  RadiusBound out;
  bool first = true;
  for (int s : message_support(code)) {
    int sum = 0;
    for (int i = 0; i < gamma; ++i) {
      const auto ip = static_cast<std::size_t>(floor_mod(i + s, gamma));
      const int delta_eta = gamma * eta_lead_xdeg[ip] + code.b[ip];
      sum += std::max(delta_eta - code.a[static_cast<std::size_t>(i)] - s, 0);
    }
    if (sum % gamma != 0) throw MalformedCode("nu(" + std::to_string(s) + ") is not an integer");
    const int nu = sum / gamma;
    out.nu[s] = nu;
    if (first || nu < out.d_lo) out.d_lo = nu;
    first = false;
  }
  if (first) throw MalformedCode("code has dimension 0");
  return out;
}

ComplexityBounds complexity_bounds(const CodeData& code) {
  const int n = code.n, g = code.genus, gamma = code.gamma;
  ComplexityBounds b;
  b.n_h = floor_div(n + 2 * g - 1, gamma);
  b.n_eta = floor_div(n + g, gamma);
  b.n_deg = g > 0 ? 1 + floor_div(n + 4 * g - 2, gamma) : n;
  b.n_iter = n + 2 * g;
  return b;
}

namespace {

void finish(PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  const auto G = static_cast<std::size_t>(code.gamma);
  pc.eta_lead_xdeg.assign(G, 0);
  int total = 0;
  for (std::size_t i = 0; i < G; ++i) {
    const auto lead = rbar_leading(pc.eta[i].c, code.b);
    if (!lead || lead->col != static_cast<int>(i)) {
      throw MalformedCode("eta_" + std::to_string(i) + " does not lead in column " + std::to_string(i));
    }
    pc.eta_lead_xdeg[i] = lead->xdeg;
    total += lead->xdeg;
  }
  if (total != code.n) throw MalformedCode("sum of eta lead degrees is not n");
  pc.bounds = complexity_bounds(code);
  for (const auto& e : pc.eta) {
    for (const auto& p : e.c) {
      if (p.deg() > pc.bounds.n_eta) throw MalformedCode("eta degree exceeds N_eta");
    }
  }
  int hdeg = -1;
  for (const auto& h : pc.lagrange) {
    for (const auto& p : h.c) hdeg = std::max(hdeg, p.deg());
  }
  if (hdeg > pc.bounds.n_h) {
    pc.warnings.push_back("Lagrange basis degree " + std::to_string(hdeg) + " exceeds N_h = " +
                          std::to_string(pc.bounds.n_h));
  }
  if (pc.d_lo < code.n - code.degG) throw MalformedCode("d_LO below n - deg(G)");

  pc.table_lc.assign(G, std::vector<Elem>(G));
  for (std::size_t i = 0; i < G; ++i) {
    for (std::size_t m = 0; m < G; ++m) pc.table_lc[i][m] = rbar_leading(code.table[i][m].c, code.b)->coeff;
  }
}

}  // namespace

PrecomputedCode precompute(CodeData code) {
  PrecomputedCode pc(std::move(code));
  auto kernel = compute_eta(pc.code);
  pc.eta = std::move(kernel.eta);
  pc.footprint = std::move(kernel.footprint);
  pc.lagrange = compute_lagrange(pc.code, pc.footprint);
  pc.encoder = make_encoder_basis(pc.code);
  std::vector<int> lead(static_cast<std::size_t>(pc.code.gamma));
  for (std::size_t i = 0; i < lead.size(); ++i) lead[i] = rbar_leading(pc.eta[i].c, pc.code.b)->xdeg;
  auto radius = compute_dlo(pc.code, lead);
  pc.nu_table = std::move(radius.nu);
  pc.d_lo = radius.d_lo;
  finish(pc);
  return pc;
}

RBarElement compute_hv(std::span<const Elem> v, const PrecomputedCode& pc) {
  const CodeData& code = pc.code;
  if (v.size() != static_cast<std::size_t>(code.n)) {
    throw DimensionError("received vector has length " + std::to_string(v.size()) + ", n = " + std::to_string(code.n));
  }
  const Field& F = code.field;
  RBarElement hv(static_cast<std::size_t>(code.gamma));
  for (std::size_t t = 0; t < v.size(); ++t) {
    F.check(v[t]);
    if (v[t].is_zero()) continue;
    for (std::size_t j = 0; j < hv.c.size(); ++j) hv.c[j].axpy(F, pc.lagrange[t].c[j], v[t]);
  }
  return hv;
}

std::uint64_t content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex_key(std::uint64_t key) {
  std::ostringstream os;
  os << std::hex << key;
  return os.str();
}

}  // namespace

std::string serialize_precomputed(const PrecomputedCode& pc, std::uint64_t key) {
  using detail::json;
  const Field& F = pc.code.field;
  json doc;
  doc["key"] = hex_key(key);
  doc["eta"] = json::array();
  for (const auto& e : pc.eta) doc["eta"].push_back(detail::rbar_to_json(F, e));
  doc["footprint"] = json::array();
  for (const auto& m : pc.footprint) doc["footprint"].push_back({m.col, m.xdeg});
  doc["lagrange"] = json::array();
  for (const auto& h : pc.lagrange) doc["lagrange"].push_back(detail::rbar_to_json(F, h));
  doc["encoder"] = json::array();
  for (const auto& r : pc.encoder.rows) doc["encoder"].push_back(detail::vec_to_json(F, r));
  doc["nu_table"] = json::array();
  for (const auto& [s, nu] : pc.nu_table) doc["nu_table"].push_back({s, nu});
  doc["d_lo"] = pc.d_lo;
  return doc.dump();
}

std::optional<PrecomputedCode> parse_precomputed(std::string_view json_text, CodeData code, std::uint64_t key) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
  if (!doc.contains("key") || doc["key"] != hex_key(key)) return std::nullopt;
  try {
    PrecomputedCode pc(std::move(code));
    const Field& F = pc.code.field;
    for (const auto& e : doc.at("eta")) pc.eta.push_back(detail::rbar_from_json(F, e));
    for (const auto& m : doc.at("footprint")) pc.footprint.push_back(Monomial{m.at(0).get<int>(), m.at(1).get<int>()});
    for (const auto& h : doc.at("lagrange")) pc.lagrange.push_back(detail::rbar_from_json(F, h));
    pc.encoder.support = message_support(pc.code);
    for (const auto& r : doc.at("encoder")) pc.encoder.rows.push_back(detail::vec_from_json(F, r));
    for (const auto& e : doc.at("nu_table")) pc.nu_table[e.at(0).get<int>()] = e.at(1).get<int>();
    pc.d_lo = doc.at("d_lo").get<int>();
    if (pc.encoder.rows.size() != pc.encoder.support.size()) return std::nullopt;
    if (pc.eta.size() != static_cast<std::size_t>(pc.code.gamma)) return std::nullopt;
    if (pc.lagrange.size() != static_cast<std::size_t>(pc.code.n)) return std::nullopt;
    finish(pc);
    return pc;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

std::filesystem::path cache_path_for(const std::filesystem::path& code_file) {
  auto p = code_file;
  p.replace_extension(".pre.json");
  return p;
}

PrecomputedCode load_precomputed(const std::filesystem::path& path, bool use_cache) {
  const std::string text = read_text_file(path);
  CodeData code = parse_code(text);
  if (!use_cache) return precompute(std::move(code));
  const auto key = content_hash(text);
  const auto cpath = cache_path_for(path);
  if (std::filesystem::exists(cpath)) {
    if (auto pc = parse_precomputed(read_text_file(cpath), code, key)) return std::move(*pc);
  }
  PrecomputedCode pc = precompute(std::move(code));
  std::ofstream out(cpath, std::ios::binary);
  if (out) out << serialize_precomputed(pc, key) << '\n';
  return pc;
}

}  // namespace agdec
