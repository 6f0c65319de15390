#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace agdec {

/// Element of GF(p^m). The digits of the residue-class representative are
/// packed base p, low degree first: digit i is (v / p^i) % p. Zero is v == 0.
struct Elem {
  std::uint32_t v = 0;

  bool is_zero() const noexcept { return v == 0; }
  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

/// GF(p^m) = GF(p)[t] / (modulus) with a fixed primitive element.
///
/// The modulus is checked for irreducibility by trial division and the
/// generator for multiplicative order p^m - 1 at construction, so any Field
/// that exists is a field with a primitive alpha. Multiplication runs through
/// log/antilog tables built from the generator; addition is digit-wise.
class Field {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  /// `modulus` holds m + 1 base-field digits, low degree first, monic.
  /// `generator` holds m digits.
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus, std::vector<std::uint32_t> generator);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return gen_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }

  bool contains(Elem a) const noexcept { return a.v < q_; }
  void check(Elem a) const;

  Elem from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  /// Integer taken mod p, as an element of the prime subfield.
  Elem from_int(long long k) const;
  /// alpha^k; k is taken mod p^m - 1.
  Elem from_power(long long k) const;
  /// Discrete log base alpha, in [0, p^m - 1). Throws on zero.
  std::uint32_t log(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, long long k) const;

  /// Digit-vector rendering, e.g. "[1,1]".
  std::string format(Elem a) const;

  friend bool operator==(const Field& x, const Field& y) noexcept {
    return x.p_ == y.p_ && x.modulus_ == y.modulus_ && x.gen_ == y.gen_;
  }

 private:
  Elem mul_by_reduction(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem gen_;
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries
  std::vector<std::uint32_t> log_;  // q entries, log_[0] unused
  std::vector<std::uint32_t> neg_;  // q entries
  std::vector<std::uint16_t> add_;  // q*q entries for small odd-characteristic fields
};

}  // namespace agdec
