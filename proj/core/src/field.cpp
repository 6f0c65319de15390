#include "agdec/field.hpp"

#include <sstream>

#include "agdec/errors.hpp"

namespace agdec {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using DigitPoly = std::vector<std::uint32_t>;

// Remainder of num modulo a monic den over GF(p).
DigitPoly poly_mod(DigitPoly num, const DigitPoly& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::uint32_t c = num[k] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[k - dd + j] = (num[k - dd + j] + (p - c) * den[j]) % p;
    }
  }
  num.resize(dd);
  return num;
}

bool is_irreducible(const DigitPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    // every monic polynomial of degree d
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx) {
      DigitPoly g(d + 1, 0);
      std::size_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      g[d] = 1;
      const DigitPoly rem = poly_mod(f, g, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus, std::vector<std::uint32_t> generator)
    : p_(p), m_(0), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw MalformedCode("field characteristic " + std::to_string(p_) + " is not prime");
  if (modulus_.size() < 2) throw MalformedCode("field modulus must have degree >= 1");
  for (auto d : modulus_) {
    if (d >= p_) throw MalformedCode("field modulus digit out of range");
  }
  if (modulus_.back() != 1) throw MalformedCode("field modulus must be monic");
  m_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (static_cast<std::uint64_t>(q_) * p_ > kMaxSize) throw MalformedCode("field larger than 2^16 elements");
    q_ *= p_;
  }
  if (!is_irreducible(modulus_, p_)) throw MalformedCode("field modulus is reducible");
  if (generator.size() != m_) throw MalformedCode("generator must have m digits");
  gen_ = from_digits(generator);

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  Elem x = one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    if (seen[x.v]) throw MalformedCode("generator is not primitive");
    seen[x.v] = true;
    exp_[k] = x.v;
    log_[x.v] = k;
    x = mul_by_reduction(x, gen_);
  }
  if (x != one()) throw MalformedCode("generator is not primitive");
  for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];

  neg_.assign(q_, 0);
  for (std::uint32_t v = 0; v < q_; ++v) {
    auto d = digits(Elem{v});
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[v] = from_digits(d).v;
  }
  if (p_ != 2 && q_ <= 256) {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, scale = 1, x1 = a, x2 = b;
        for (std::uint32_t i = 0; i < m_; ++i) {
          r += ((x1 % p_ + x2 % p_) % p_) * scale;
          x1 /= p_;
          x2 /= p_;
          scale *= p_;
        }
        add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(r);
      }
    }
  }
}

void Field::check(Elem a) const {
  if (!contains(a)) throw MalformedElement("element " + std::to_string(a.v) + " outside GF(" + std::to_string(q_) + ")");
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != m_) {
    throw MalformedElement("element has " + std::to_string(digits.size()) + " digits, field needs " + std::to_string(m_));
  }
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw MalformedElement("digit " + std::to_string(digits[i]) + " out of range");
    v = v * p_ + digits[i];
  }
  return Elem{v};
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  check(a);
  std::vector<std::uint32_t> d(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a.v % p_;
    a.v /= p_;
  }
  return d;
}

Elem Field::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_power(long long k) const {
  const long long order = q_ - 1;
  long long r = k % order;
  if (r < 0) r += order;
  return Elem{exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::log(Elem a) const {
  check(a);
  if (a.is_zero()) throw DivisionByZero("logarithm of zero");
  return log_[a.v];
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (!add_.empty()) return Elem{add_[static_cast<std::size_t>(a.v) * q_ + b.v]};
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a.v % p_ + b.v % p_) % p_) * scale;
    a.v /= p_;
    b.v /= p_;
    scale *= p_;
  }
  return Elem{r};
}

Elem Field::neg(Elem a) const {
  check(a);
  return Elem{neg_[a.v]};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return zero();
  return Elem{exp_[log_[a.v] + log_[b.v]]};
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  return Elem{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long long k) const {
  check(a);
  if (a.is_zero()) {
    if (k < 0) throw DivisionByZero("negative power of zero");
    return k == 0 ? one() : zero();
  }
  const long long order = q_ - 1;
  long long e = (static_cast<long long>(log_[a.v]) * (k % order)) % order;
  if (e < 0) e += order;
  return Elem{exp_[static_cast<std::size_t>(e)]};
}

std::string Field::format(Elem a) const {
  std::ostringstream os;
  os << '[';
  const auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ']';
  return os.str();
}

// Schoolbook product of the digit polynomials reduced by the modulus; used
// only while the log tables are being built.
Elem Field::mul_by_reduction(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  DigitPoly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  return from_digits(poly_mod(std::move(prod), modulus_, p_));
}

}  // namespace agdec
