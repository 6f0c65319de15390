#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agdec/field.hpp"
#include "agdec/module_row.hpp"

namespace agdec {

/// Full description of one evaluation code C_L(D, G) with a distinguished
/// point Q outside D.
///
/// R (functions with poles only at Q) has the F[x]-basis y_0..y_{gamma-1}
/// with rho(y_i) = a[i]; Rbar has the basis ybar_0..ybar_{gamma-1} with
/// delta(ybar_i) = b[i]. `table[i][m]` expresses y_i * ybar_m in the ybar
/// basis. Only deg(G) is carried; nothing downstream needs G itself.
struct CodeData {
  explicit CodeData(Field f) : field(std::move(f)) {}

  Field field;
  int n = 0;
  int genus = 0;
  int gamma = 0;
  int degG = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<Elem> ev_x;                          // x(P_t)
  std::vector<std::vector<Elem>> ev_y;             // [j][t] = y_j(P_t)
  std::vector<std::vector<Elem>> ev_ybar;          // [j][t] = ybar_j(P_t)
  std::vector<std::vector<RBarElement>> table;     // [i][m] = y_i * ybar_m

  Weights weights() const noexcept { return Weights{a, b}; }
};

/// Result of phi_of: s = gamma*k + b[m]. s is in Lambda-bar iff k >= 0, in
/// which case phi_s = x^k ybar_m.
struct PhiIndex {
  int k = 0;
  int m = 0;

  bool in_semigroup() const noexcept { return k >= 0; }
  friend bool operator==(const PhiIndex&, const PhiIndex&) = default;
};

PhiIndex phi_of(int s, const CodeData& code);
bool in_rbar_semigroup(int s, const CodeData& code);

/// Sorted nonpositive elements s_0 < ... < s_{k-1} of Lambda-bar.
std::vector<int> message_support(const CodeData& code);

/// Rbar element x^k ybar_m.
RBarElement rbar_monomial(const CodeData& code, int m, int k);

/// y_i * f in ybar coordinates.
RBarElement mul_y(int i, const RBarElement& f, const CodeData& code);

/// (f(P_1), ..., f(P_n)).
std::vector<Elem> eval_rbar(const RBarElement& f, const CodeData& code);

/// delta(f); throws on the zero element.
int rbar_delta(const RBarElement& f, const CodeData& code);

/// Generator matrix rows ev(phi_{s_i}) for the message support.
struct EncoderBasis {
  std::vector<int> support;
  std::vector<std::vector<Elem>> rows;
};

EncoderBasis make_encoder_basis(const CodeData& code);

/// ev(sum_i message[i] phi_{s_i}).
std::vector<Elem> encode(std::span<const Elem> message, const CodeData& code, const EncoderBasis& basis);

/// Checks every structural invariant of CodeData: sizes, a_0 = 0, residues
/// of a and b, a_i <= 2g + gamma - 1, element ranges, pointwise consistency
/// of the product table and the leading weight a_i + b_m of every entry.
/// Throws MalformedCode naming the first failure.
void validate(const CodeData& code);

}  // namespace agdec
