#pragma once

#include <optional>
#include <span>
#include <vector>

#include "agdec/poly.hpp"

namespace agdec {

/// Element of Rbar in coordinates over the F[x]-basis ybar_0..ybar_{gamma-1}.
struct RBarElement {
  std::vector<Poly> c;

  RBarElement() = default;
  explicit RBarElement(std::size_t gamma) : c(gamma) {}
  explicit RBarElement(std::vector<Poly> coords) : c(std::move(coords)) {}

  std::size_t gamma() const noexcept { return c.size(); }
  bool is_zero() const noexcept;
  friend bool operator==(const RBarElement&, const RBarElement&) = default;
};

/// Element f z + g of Rz (+) Rbar: u holds the coefficients of y_j z,
/// w those of ybar_j.
struct ModuleRow {
  std::vector<Poly> u;
  std::vector<Poly> w;

  ModuleRow() = default;
  explicit ModuleRow(std::size_t gamma) : u(gamma), w(gamma) {}

  std::size_t gamma() const noexcept { return u.size(); }
  bool is_zero() const noexcept;
  int max_degree() const noexcept;
  friend bool operator==(const ModuleRow&, const ModuleRow&) = default;
};

/// Leading term under >_s. `col` indexes y_col z when has_z, else ybar_col;
/// `sdeg` is the weight delta_s of the term.
struct LeadingTerm {
  bool has_z = false;
  int col = 0;
  int xdeg = 0;
  Elem coeff{};
  int sdeg = 0;

  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// Leading monomial of an Rbar element under delta. Weights gamma*k + b_j are
/// distinct across columns, so no tie can occur.
struct RBarLead {
  int col = 0;
  int xdeg = 0;
  Elem coeff{};
  int weight = 0;
};

/// a = rho(y_j), b = delta(ybar_j); both of length gamma.
struct Weights {
  std::span<const int> a;
  std::span<const int> b;

  int gamma() const noexcept { return static_cast<int>(a.size()); }
};

/// Maximal term of a nonzero row under >_s. Monomial weights are
/// gamma*k + a_j + s for x^k y_j z and gamma*k + b_j for x^k ybar_j; on equal
/// weight the z-monomial is the larger. Throws on the zero row.
LeadingTerm row_leading(const ModuleRow& r, int s, const Weights& wt);

std::optional<RBarLead> rbar_leading(std::span<const Poly> coords, std::span<const int> b);

/// dst + scalar * x^xshift * src, componentwise.
ModuleRow row_axpy(const Field& F, const ModuleRow& dst, const ModuleRow& src, Elem scalar, int xshift);
void row_axpy_inplace(const Field& F, ModuleRow& dst, const ModuleRow& src, Elem scalar, int xshift);
void row_shift_inplace(ModuleRow& r, int k);

}  // namespace agdec
