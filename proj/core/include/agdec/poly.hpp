#pragma once

#include <span>
#include <vector>

#include "agdec/field.hpp"

namespace agdec {

/// Univariate polynomial over a Field, coefficients low degree first.
/// Trailing zeros are stripped on every construction and mutation, so the
/// zero polynomial is the empty vector and deg/lc are O(1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  /// c * x^k
  static Poly monomial(Elem c, int k);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int deg() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Elem lc() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
  /// Coefficient of x^k; zero past the degree and for negative k.
  Elem coeff(int k) const noexcept {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? Elem{} : c_[static_cast<std::size_t>(k)];
  }
  std::span<const Elem> coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// this += c * x^shift * src
  void axpy(const Field& F, const Poly& src, Elem c, int shift = 0);
  void scale(const Field& F, Elem c);
  void shift(int k);

 private:
  void trim() noexcept;
  std::vector<Elem> c_;
};

/// f[x^k], the bracket coefficient used by the decoder.
inline Elem coeff_at(const Poly& f, int k) { return f.coeff(k); }

Poly add(const Field& F, const Poly& f, const Poly& g);
Poly sub(const Field& F, const Poly& f, const Poly& g);
Poly scale(const Field& F, const Poly& f, Elem c);
Poly shift(const Poly& f, int k);
Poly mul(const Field& F, const Poly& f, const Poly& g);
Elem eval(const Field& F, const Poly& f, Elem x);

}  // namespace agdec
