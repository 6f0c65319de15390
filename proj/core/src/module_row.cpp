#include "agdec/module_row.hpp"

#include <algorithm>

#include "agdec/errors.hpp"

namespace agdec {

bool RBarElement::is_zero() const noexcept {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

bool ModuleRow::is_zero() const noexcept {
  auto z = [](const Poly& p) { return p.is_zero(); };
  return std::all_of(u.begin(), u.end(), z) && std::all_of(w.begin(), w.end(), z);
}

int ModuleRow::max_degree() const noexcept {
  int d = -1;
  for (const auto& p : u) d = std::max(d, p.deg());
  for (const auto& p : w) d = std::max(d, p.deg());
  return d;
}

LeadingTerm row_leading(const ModuleRow& r, int s, const Weights& wt) {
  const int gamma = wt.gamma();
  if (static_cast<int>(r.u.size()) != gamma || static_cast<int>(r.w.size()) != gamma) {
    throw DimensionError("row width does not match gamma");
  }
  std::optional<LeadingTerm> best;
  for (int j = 0; j < gamma; ++j) {
    const Poly& p = r.u[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    const int weight = gamma * p.deg() + wt.a[static_cast<std::size_t>(j)] + s;
    if (!best || weight > best->sdeg) best = LeadingTerm{true, j, p.deg(), p.lc(), weight};
  }
  for (int j = 0; j < gamma; ++j) {
    const Poly& p = r.w[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    const int weight = gamma * p.deg() + wt.b[static_cast<std::size_t>(j)];
    // strict: a z-monomial of equal weight stays in front
    if (!best || weight > best->sdeg || (weight == best->sdeg && !best->has_z)) {
      best = LeadingTerm{false, j, p.deg(), p.lc(), weight};
    }
  }
  if (!best) throw Error("leading term of the zero row");
  return *best;
}

std::optional<RBarLead> rbar_leading(std::span<const Poly> coords, std::span<const int> b) {
  const int gamma = static_cast<int>(b.size());
  std::optional<RBarLead> best;
  for (int j = 0; j < gamma; ++j) {
    const Poly& p = coords[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    const int weight = gamma * p.deg() + b[static_cast<std::size_t>(j)];
    if (!best || weight > best->weight) best = RBarLead{j, p.deg(), p.lc(), weight};
  }
  return best;
}

void row_axpy_inplace(const Field& F, ModuleRow& dst, const ModuleRow& src, Elem scalar, int xshift) {
  if (dst.gamma() != src.gamma()) throw DimensionError("row_axpy on rows of different gamma");
  for (std::size_t j = 0; j < dst.u.size(); ++j) {
    dst.u[j].axpy(F, src.u[j], scalar, xshift);
    dst.w[j].axpy(F, src.w[j], scalar, xshift);
  }
}

ModuleRow row_axpy(const Field& F, const ModuleRow& dst, const ModuleRow& src, Elem scalar, int xshift) {
  ModuleRow out = dst;
  row_axpy_inplace(F, out, src, scalar, xshift);
  return out;
}

void row_shift_inplace(ModuleRow& r, int k) {
  for (auto& p : r.u) p.shift(k);
  for (auto& p : r.w) p.shift(k);
}

}  // namespace agdec
