#include "agdec/poly.hpp"

#include <algorithm>

#include "agdec/errors.hpp"

namespace agdec {

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Elem c, int k) {
  if (k < 0) throw Error("negative monomial exponent");
  if (c.is_zero()) return {};
  std::vector<Elem> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::axpy(const Field& F, const Poly& src, Elem c, int shift) {
  if (c.is_zero() || src.is_zero()) return;
  if (shift < 0) throw Error("negative shift in axpy");
  const std::size_t off = static_cast<std::size_t>(shift);
  if (c_.size() < src.c_.size() + off) c_.resize(src.c_.size() + off);
  for (std::size_t k = 0; k < src.c_.size(); ++k) {
    c_[k + off] = F.add(c_[k + off], F.mul(c, src.c_[k]));
  }
  trim();
}

void Poly::scale(const Field& F, Elem c) {
  if (c.is_zero()) {
    c_.clear();
    return;
  }
  for (auto& e : c_) e = F.mul(c, e);
}

void Poly::shift(int k) {
  if (k < 0) throw Error("negative shift");
  if (c_.empty() || k == 0) return;
  c_.insert(c_.begin(), static_cast<std::size_t>(k), Elem{});
}

Poly add(const Field& F, const Poly& f, const Poly& g) {
  Poly r = f;
  r.axpy(F, g, F.one());
  return r;
}

Poly sub(const Field& F, const Poly& f, const Poly& g) {
  Poly r = f;
  r.axpy(F, g, F.neg(F.one()));
  return r;
}

Poly scale(const Field& F, const Poly& f, Elem c) {
  Poly r = f;
  r.scale(F, c);
  return r;
}

Poly shift(const Poly& f, int k) {
  Poly r = f;
  r.shift(k);
  return r;
}

Poly mul(const Field& F, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<Elem> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return Poly(std::move(out));
}

Elem eval(const Field& F, const Poly& f, Elem x) {
  Elem acc{};
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = F.add(F.mul(acc, x), c[k]);
  return acc;
}

}  // namespace agdec
