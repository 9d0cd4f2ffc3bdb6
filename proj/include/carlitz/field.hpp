#pragma once

/**
 * @file field.hpp
 * @brief Table-driven finite fields F_q, q = p^r.
 *
 * An element is stored as an integer code: the base-p digits of the code are
 * its coordinates in the basis 1, a, a^2, ..., a^{r-1}, where a is the class
 * of x modulo the field modulus. Multiplication runs through discrete
 * logarithm tables built once per field; addition is digitwise mod p.
 *
 * The residue fields A/p of residue.hpp reuse the same machinery with the
 * coordinates of t^j a^i packed into a single code.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/integer.hpp"

namespace carlitz {

namespace detail {

/// Coordinatewise arithmetic on vectors in (Z/p)^m packed as base-p codes.
class DigitArithmetic {
 public:
  DigitArithmetic() = default;

  DigitArithmetic(std::uint32_t p, unsigned m) : p_(p), m_(m), size_(static_cast<std::uint32_t>(ipow(p, m))) {
    pow_.resize(m_ + 1);
    for (unsigned i = 0; i <= m_; ++i) pow_[i] = static_cast<std::uint32_t>(ipow(p_, i));
    if (p_ != 2 && m_ > 1 && size_ <= kTableLimit) {
      add_table_.resize(static_cast<std::size_t>(size_) * size_);
      for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = 0; b < size_; ++b) add_table_[static_cast<std::size_t>(a) * size_ + b] = slow_add(a, b);
      neg_table_.resize(size_);
      for (std::uint32_t a = 0; a < size_; ++a) neg_table_[a] = slow_neg(a);
    }
  }

  std::uint32_t p() const { return p_; }
  unsigned digits() const { return m_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    return slow_add(a, b);
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (!neg_table_.empty()) return neg_table_[a];
    return slow_neg(a);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t digit(std::uint32_t code, unsigned i) const { return (code / pow_[i]) % p_; }

  std::vector<std::uint32_t> unpack(std::uint32_t code) const {
    std::vector<std::uint32_t> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
      out[i] = code % p_;
      code /= p_;
    }
    return out;
  }

  std::uint32_t pack(const std::vector<std::uint32_t>& digits) const {
    std::uint32_t code = 0;
    for (unsigned i = m_; i-- > 0;) code = code * p_ + (i < digits.size() ? digits[i] % p_ : 0);
    return code;
  }

 private:
  static constexpr std::uint32_t kTableLimit = 1024;

  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t s = (a % p_ + b % p_) % p_;
      out += s * pow_[i];
      a /= p_;
      b /= p_;
    }
    return out;
  }

  std::uint32_t slow_neg(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t d = a % p_;
      out += (d == 0 ? 0 : p_ - d) * pow_[i];
      a /= p_;
    }
    return out;
  }

  std::uint32_t p_ = 2;
  unsigned m_ = 1;
  std::uint32_t size_ = 2;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
};

/**
 * Exp/log tables of a finite field with `size` elements (codes 0..size-1,
 * code 0 the zero element, code 1 the identity).
 *
 * Construction searches for a primitive element using the supplied
 * reference multiplication. Finding an element of multiplicative order
 * size-1 proves the ring is a field; if none exists construction fails.
 */
class LogTables {
 public:
  using SlowMul = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

  LogTables() = default;

  LogTables(std::uint32_t size, const SlowMul& slow_mul) : size_(size) {
    const std::uint64_t order = size_ - 1;
    const auto primes = prime_divisors(order);
    auto slow_pow = [&](std::uint32_t b, std::uint64_t e) {
      std::uint32_t acc = 1;
      while (e != 0) {
        if (e & 1U) acc = slow_mul(acc, b);
        e >>= 1U;
        if (e != 0) b = slow_mul(b, b);
      }
      return acc;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t c = (size_ == 2 ? 1 : 2); c < size_; ++c) {
      if (slow_pow(c, order) != 1) continue;
      const bool primitive =
          std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) { return slow_pow(c, order / l) != 1; });
      if (primitive) {
        gen = c;
        break;
      }
    }
    if (gen == 0) throw std::invalid_argument("no primitive element: modulus is not irreducible");
    generator_ = gen;
    exp_.assign(2 * order + 1, 0);
    log_.assign(size_, kNoLog);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      if (log_[x] != kNoLog) throw std::logic_error("LogTables: repeated power");
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, gen);
    }
    for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  }

  std::uint32_t size() const { return size_; }
  std::uint32_t generator() const { return generator_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[a];
    return l == 0 ? 1 : exp_[(size_ - 1) - l];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t order = size_ - 1;
    return exp_[static_cast<std::uint32_t>(mulmod(log_[a], e % order, order))];
  }

  /// Discrete log to the base generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }

  std::uint32_t exp(std::uint64_t i) const { return exp_[i % (size_ - 1)]; }

 private:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFU;
  std::uint32_t size_ = 2;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace detail

/// Element of F_q as a base-p code over the basis 1, a, ..., a^{r-1}.
struct FqElem {
  std::uint32_t code = 0;
  friend bool operator==(FqElem, FqElem) = default;
  friend auto operator<=>(FqElem, FqElem) = default;
};

/**
 * F_q = F_p[x]/(modulus). Immutable after construction and freely shared;
 * obtain instances through fq_make(), which also validates the modulus.
 */
class FieldDescriptor {
 public:
  using value_type = FqElem;

  static constexpr std::uint64_t kMaxOrder = 1U << 16;

  /// Trusts that p is prime and modulus is monic of degree r; fails if the
  /// quotient ring has no primitive element (modulus reducible).
  FieldDescriptor(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
      : p_(p), r_(r), modulus_(std::move(modulus)) {
    if (ipow_checked(p, r) > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
    if (modulus_.size() != r_ + 1 || modulus_.back() != 1) throw std::invalid_argument("modulus must be monic of degree r");
    q_ = static_cast<std::uint32_t>(detail::ipow(p_, r_));
    digits_ = detail::DigitArithmetic(p_, r_);
    tables_ = detail::LogTables(q_, [this](std::uint32_t a, std::uint32_t b) { return slow_mul(a, b); });
    if (r_ == 1) {
      generator_ = FqElem{modulus_[0] == 0 ? 0 : p_ - modulus_[0]};
    } else {
      generator_ = FqElem{p_};
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return r_ == 1; }
  /// Ascending coefficients over F_p, monic, length r + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const { return {}; }
  FqElem one() const { return {1}; }
  /// The class a of x modulo the field modulus.
  FqElem generator() const { return generator_; }
  /// True when a generates F_q^x (elements then render as powers of a).
  bool generator_is_primitive() const {
    if (generator_.code == 0) return q_ == 2;
    const std::uint64_t l = tables_.log(generator_.code);
    std::uint64_t a = l, b = q_ - 1;
    while (b != 0) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    return a == 1;
  }

  FqElem add(FqElem a, FqElem b) const { return {digits_.add(a.code, b.code)}; }
  FqElem sub(FqElem a, FqElem b) const { return {digits_.sub(a.code, b.code)}; }
  FqElem neg(FqElem a) const { return {digits_.neg(a.code)}; }
  FqElem mul(FqElem a, FqElem b) const { return {tables_.mul(a.code, b.code)}; }
  FqElem inv(FqElem a) const { return {tables_.inv(a.code)}; }
  FqElem pow(FqElem a, std::uint64_t e) const { return {tables_.pow(a.code, e)}; }
  bool is_zero(FqElem a) const { return a.code == 0; }
  FqElem from_int(std::int64_t n) const {
    const auto m = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(((n % m) + m) % m)};
  }
  /// x -> x^q is the identity on F_q.
  FqElem frobenius(FqElem a) const { return a; }
  std::size_t frobenius_degree() const { return q_; }

  std::uint32_t digit(FqElem a, unsigned i) const { return digits_.digit(a.code, i); }
  std::vector<std::uint32_t> coordinates(FqElem a) const { return digits_.unpack(a.code); }
  FqElem from_coordinates(const std::vector<std::uint32_t>& c) const { return {digits_.pack(c)}; }

  /// Discrete log with respect to the table's primitive element.
  std::uint32_t log(FqElem a) const { return tables_.log(a.code); }
  FqElem exp(std::uint64_t i) const { return {tables_.exp(i)}; }
  FqElem primitive_element() const { return {tables_.generator()}; }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
  }

 private:
  static std::uint64_t ipow_checked(std::uint64_t p, unsigned r) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < r; ++i) {
      v *= p;
      if (v > kMaxOrder) return v;
    }
    return v;
  }

  // Schoolbook product of digit vectors reduced by the monic modulus.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits_.unpack(a);
    const auto y = digits_.unpack(b);
    std::vector<std::uint64_t> prod(2 * r_, 0);
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    for (unsigned k = 2 * r_ - 1; k >= r_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned j = 0; j < r_; ++j) prod[k - r_ + j] = (prod[k - r_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    std::vector<std::uint32_t> out(r_);
    for (unsigned i = 0; i < r_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return digits_.pack(out);
  }

  std::uint32_t p_;
  unsigned r_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t q_ = 0;
  detail::DigitArithmetic digits_;
  detail::LogTables tables_;
  FqElem generator_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

}  // namespace carlitz
