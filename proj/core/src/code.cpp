#include "agdec/code.hpp"

#include <algorithm>

#include "agdec/errors.hpp"

namespace agdec {

namespace {

int floor_mod(int s, int g) {
  const int r = s % g;
  return r < 0 ? r + g : r;
}

[[noreturn]] void bad(const std::string& what) { throw MalformedCode(what); }

}  // namespace

PhiIndex phi_of(int s, const CodeData& code) {
  const int m = floor_mod(s, code.gamma);
  const int diff = s - code.b[static_cast<std::size_t>(m)];
  // b_m = m mod gamma, so the division is exact for validated data
  return PhiIndex{diff >= 0 ? diff / code.gamma : -((-diff + code.gamma - 1) / code.gamma), m};
}

bool in_rbar_semigroup(int s, const CodeData& code) { return phi_of(s, code).in_semigroup(); }

std::vector<int> message_support(const CodeData& code) {
  std::vector<int> out;
  const int lo = *std::min_element(code.b.begin(), code.b.end());
  for (int s = lo; s <= 0; ++s) {
    if (in_rbar_semigroup(s, code)) out.push_back(s);
  }
  return out;
}

RBarElement rbar_monomial(const CodeData& code, int m, int k) {
  RBarElement f(static_cast<std::size_t>(code.gamma));
  f.c[static_cast<std::size_t>(m)] = Poly::monomial(code.field.one(), k);
  return f;
}

RBarElement mul_y(int i, const RBarElement& f, const CodeData& code) {
  if (i < 0 || i >= code.gamma) throw DimensionError("mul_y index out of range");
  const auto& F = code.field;
  const auto& row = code.table[static_cast<std::size_t>(i)];
  RBarElement out(static_cast<std::size_t>(code.gamma));
  for (int m = 0; m < code.gamma; ++m) {
    const Poly& fm = f.c[static_cast<std::size_t>(m)];
    if (fm.is_zero()) continue;
    const auto& entry = row[static_cast<std::size_t>(m)];
    for (int j = 0; j < code.gamma; ++j) {
      const Poly& t = entry.c[static_cast<std::size_t>(j)];
      if (t.is_zero()) continue;
      const auto fc = fm.coeffs();
      for (std::size_t k = 0; k < fc.size(); ++k) {
        out.c[static_cast<std::size_t>(j)].axpy(F, t, fc[k], static_cast<int>(k));
      }
    }
  }
  return out;
}

std::vector<Elem> eval_rbar(const RBarElement& f, const CodeData& code) {
  const auto& F = code.field;
  std::vector<Elem> out(static_cast<std::size_t>(code.n));
  for (int j = 0; j < code.gamma; ++j) {
    const Poly& p = f.c[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    const auto& yb = code.ev_ybar[static_cast<std::size_t>(j)];
    for (int t = 0; t < code.n; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      out[ti] = F.add(out[ti], F.mul(eval(F, p, code.ev_x[ti]), yb[ti]));
    }
  }
  return out;
}

int rbar_delta(const RBarElement& f, const CodeData& code) {
  const auto lead = rbar_leading(f.c, code.b);
  if (!lead) throw Error("delta of the zero element");
  return lead->weight;
}

EncoderBasis make_encoder_basis(const CodeData& code) {
  EncoderBasis basis;
  basis.support = message_support(code);
  for (int s : basis.support) {
    const auto phi = phi_of(s, code);
    basis.rows.push_back(eval_rbar(rbar_monomial(code, phi.m, phi.k), code));
  }
  return basis;
}

std::vector<Elem> encode(std::span<const Elem> message, const CodeData& code, const EncoderBasis& basis) {
  if (message.size() != basis.rows.size()) {
    throw DimensionError("message has length " + std::to_string(message.size()) + ", code dimension is " +
                         std::to_string(basis.rows.size()));
  }
  const auto& F = code.field;
  std::vector<Elem> out(static_cast<std::size_t>(code.n));
  for (std::size_t i = 0; i < message.size(); ++i) {
    F.check(message[i]);
    if (message[i].is_zero()) continue;
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = F.add(out[t], F.mul(message[i], basis.rows[i][t]));
  }
  return out;
}

void validate(const CodeData& code) {
  const auto& F = code.field;
  const int gamma = code.gamma;
  const auto G = static_cast<std::size_t>(gamma);
  const auto N = static_cast<std::size_t>(code.n);
  if (gamma < 1) bad("gamma must be positive");
  if (code.n < 1) bad("n must be positive");
  if (code.genus < 0) bad("genus must be nonnegative");
  if (code.a.size() != G || code.b.size() != G) bad("a and b must have gamma entries");
  if (code.a[0] != 0) bad("a_0 must be 0");
  for (int i = 0; i < gamma; ++i) {
    const int ai = code.a[static_cast<std::size_t>(i)];
    const int bi = code.b[static_cast<std::size_t>(i)];
    if (ai < 0) bad("a_" + std::to_string(i) + " is negative");
    if (floor_mod(ai, gamma) != i) bad("a_" + std::to_string(i) + " is not congruent to " + std::to_string(i));
    if (floor_mod(bi, gamma) != i) bad("b_" + std::to_string(i) + " is not congruent to " + std::to_string(i));
    if (ai > 2 * code.genus + gamma - 1) bad("a_" + std::to_string(i) + " exceeds 2g + gamma - 1");
    if (bi < -code.degG) bad("b_" + std::to_string(i) + " is below -deg(G)");
  }
  if (code.ev_x.size() != N) bad("ev_x must have n entries");
  if (code.ev_y.size() != G || code.ev_ybar.size() != G) bad("ev_y and ev_ybar must have gamma rows");
  for (std::size_t j = 0; j < G; ++j) {
    if (code.ev_y[j].size() != N || code.ev_ybar[j].size() != N) bad("evaluation rows must have n entries");
  }
  auto check_elems = [&](const std::vector<Elem>& v) {
    for (auto e : v) {
      if (!F.contains(e)) bad("field element out of range");
    }
  };
  check_elems(code.ev_x);
  for (std::size_t j = 0; j < G; ++j) {
    check_elems(code.ev_y[j]);
    check_elems(code.ev_ybar[j]);
  }
  for (std::size_t t = 0; t < N; ++t) {
    if (code.ev_y[0][t] != F.one()) bad("y_0 must be the constant 1");
  }
  if (code.table.size() != G) bad("table must have gamma rows");
  for (std::size_t i = 0; i < G; ++i) {
    if (code.table[i].size() != G) bad("table rows must have gamma entries");
    for (std::size_t m = 0; m < G; ++m) {
      const auto& entry = code.table[i][m];
      const std::string where = "table[" + std::to_string(i) + "][" + std::to_string(m) + "]";
      if (entry.c.size() != G) bad(where + " must have gamma polynomials");
      for (const auto& p : entry.c) {
        for (auto e : p.coeffs()) {
          if (!F.contains(e)) bad(where + " has an element out of range");
        }
      }
      const auto lead = rbar_leading(entry.c, code.b);
      if (!lead || lead->weight != code.a[i] + code.b[m]) bad(where + " does not have leading weight a_i + b_m");
      const auto values = eval_rbar(entry, code);
      for (std::size_t t = 0; t < N; ++t) {
        if (values[t] != F.mul(code.ev_y[i][t], code.ev_ybar[m][t])) {
          bad(where + " disagrees with y_i * ybar_m at point " + std::to_string(t + 1));
        }
      }
    }
  }
}

}  // namespace agdec
