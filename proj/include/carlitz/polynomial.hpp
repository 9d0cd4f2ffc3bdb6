#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a ring context.
 *
 * Coefficients are stored in ascending degree with no trailing zeros, so
 * equality is coefficientwise. The zero polynomial has no coefficients and
 * degree kDegreeOfZero.
 */

#include <algorithm>
#include <climits>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "carlitz/ring.hpp"

namespace carlitz {

/// Degree of the zero polynomial ("minus infinity").
inline constexpr int kDegreeOfZero = INT_MIN;

template <Ring R>
class Polynomial {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit Polynomial(std::shared_ptr<const R> ring) : ring_(std::move(ring)) {}

  Polynomial(std::shared_ptr<const R> ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial constant(std::shared_ptr<const R> ring, value_type c) {
    return Polynomial(std::move(ring), std::vector<value_type>{std::move(c)});
  }

  static Polynomial monomial(std::shared_ptr<const R> ring, value_type c, std::size_t k) {
    std::vector<value_type> v(k + 1, ring->zero());
    v[k] = std::move(c);
    return Polynomial(std::move(ring), std::move(v));
  }

  /// The variable itself.
  static Polynomial variable(std::shared_ptr<const R> ring) {
    auto one = ring->one();
    return monomial(std::move(ring), std::move(one), 1);
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }

  int degree() const { return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i (zero beyond the degree).
  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
  std::span<const value_type> coefficients() const { return coeffs_; }
  const value_type& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_->one(); }

  value_type eval(const value_type& x) const {
    auto acc = ring_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ring_->add(ring_->mul(acc, x), coeffs_[i]);
    return acc;
  }

  Polynomial scale(const value_type& c) const {
    std::vector<value_type> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(ring_->mul(a, c));
    return Polynomial(ring_, std::move(v));
  }

  /// Multiply by x^k.
  Polynomial shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(k, ring_->zero());
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(ring_, std::move(v));
  }

  Polynomial derivative() const {
    std::vector<value_type> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(ring_->mul(ring_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]));
    return Polynomial(ring_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial add");
    const auto& r = *a.ring_;
    std::vector<value_type> v(std::max(a.size(), b.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.size() && i < b.size())
        v[i] = r.add(a.coeffs_[i], b.coeffs_[i]);
      else
        v[i] = i < a.size() ? a.coeffs_[i] : b.coeffs_[i];
    }
    return Polynomial(a.ring_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<value_type> v;
    v.reserve(a.size());
    for (const auto& c : a.coeffs_) v.push_back(a.ring_->neg(c));
    return Polynomial(a.ring_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial mul");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const auto& r = *a.ring_;
    std::vector<value_type> v(a.size() + b.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (r.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = r.add(v[i + j], r.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(a.ring_, std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::shared_ptr<const R> ring_;
  std::vector<value_type> coeffs_;
};

template <Ring R>
struct DivRem {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

/**
 * Euclidean division. Over a field any nonzero divisor is allowed; over a
 * general ring the divisor must be monic.
 */
template <Ring R>
DivRem<R> divrem(const Polynomial<R>& f, const Polynomial<R>& g) {
  require_same_ring(f.ring_ptr(), g.ring_ptr(), "divrem");
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& r = f.ring();
  using V = typename R::value_type;
  V lead_inv = r.one();
  if constexpr (Field<R>) {
    lead_inv = r.inv(g.leading());
  } else {
    if (!g.is_monic()) throw std::domain_error("divrem over a ring needs a monic divisor");
  }
  const int dg = g.degree();
  if (f.degree() < dg) return {Polynomial<R>(f.ring_ptr()), f};
  std::vector<V> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<V> quo(static_cast<std::size_t>(f.degree() - dg + 1), r.zero());
  const auto gc = g.coefficients();
  for (int k = f.degree(); k >= dg; --k) {
    const V c = r.mul(rem[static_cast<std::size_t>(k)], lead_inv);
    quo[static_cast<std::size_t>(k - dg)] = c;
    if (r.is_zero(c)) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - dg + j)];
      slot = r.sub(slot, r.mul(c, gc[static_cast<std::size_t>(j)]));
    }
  }
  rem.erase(rem.begin() + dg, rem.end());
  return {Polynomial<R>(f.ring_ptr(), std::move(quo)), Polynomial<R>(f.ring_ptr(), std::move(rem))};
}

template <Ring R>
Polynomial<R> operator%(const Polynomial<R>& f, const Polynomial<R>& g) {
  return divrem(f, g).remainder;
}

template <Field R>
Polynomial<R> make_monic(const Polynomial<R>& f) {
  if (f.is_zero()) return f;
  return f.scale(f.ring().inv(f.leading()));
}

/// Monic gcd (gcd(0, 0) = 0).
template <Field R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.is_zero()) {
    auto rem = a % b;
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(a);
}

/// base^e mod m.
template <Ring R>
Polynomial<R> pow_mod(Polynomial<R> base, std::uint64_t e, const Polynomial<R>& m) {
  Polynomial<R> acc = Polynomial<R>::constant(m.ring_ptr(), m.ring().one()) % m;
  base = base % m;
  while (e != 0) {
    if (e & 1U) acc = (acc * base) % m;
    e >>= 1U;
    if (e != 0) base = (base * base) % m;
  }
  return acc;
}

}  // namespace carlitz
