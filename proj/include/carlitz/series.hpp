#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series R[[z]]/(z^N) over a ring context.
 */

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "carlitz/polynomial.hpp"
#include "carlitz/ring.hpp"

namespace carlitz {

template <Ring R>
class TruncSeries {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  TruncSeries(std::shared_ptr<const R> ring, std::size_t order)
      : ring_(std::move(ring)), coeffs_(order, ring_->zero()) {}

  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncSeries(std::shared_ptr<const R> ring, std::size_t order, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order, ring_->zero());
  }

  static TruncSeries one(std::shared_ptr<const R> ring, std::size_t order) {
    TruncSeries s(std::move(ring), order);
    if (order > 0) s.coeffs_[0] = s.ring_->one();
    return s;
  }

  static TruncSeries monomial(std::shared_ptr<const R> ring, std::size_t order, value_type c, std::size_t k) {
    TruncSeries s(std::move(ring), order);
    if (k < order) s.coeffs_[k] = std::move(c);
    return s;
  }

  /// The series variable z.
  static TruncSeries variable(std::shared_ptr<const R> ring, std::size_t order) {
    auto one = ring->one();
    return monomial(std::move(ring), order, std::move(one), 1);
  }

  static TruncSeries from_polynomial(const Polynomial<R>& f, std::size_t order) {
    const auto c = f.coefficients();
    return TruncSeries(f.ring_ptr(), order, std::vector<value_type>(c.begin(), c.end()));
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  std::size_t order() const { return coeffs_.size(); }
  const value_type& coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, value_type v) { coeffs_.at(i) = std::move(v); }
  std::span<const value_type> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order() for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!ring_->is_zero(coeffs_[i])) return i;
    return coeffs_.size();
  }
  bool is_zero() const { return valuation() == order(); }

  /// Same series known to lower precision.
  TruncSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot raise precision");
    return TruncSeries(ring_, order, std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  /// Multiply by z^k, keeping the order.
  TruncSeries shift_up(std::size_t k) const {
    TruncSeries s(ring_, order());
    for (std::size_t i = 0; i + k < order(); ++i) s.coeffs_[i + k] = coeffs_[i];
    return s;
  }

  /// Divide by z^k; the result is known to order() - k.
  TruncSeries shift_down(std::size_t k) const {
    if (k > order() || valuation() < k) throw std::domain_error("shift_down: series not divisible by z^k");
    return TruncSeries(ring_, order() - k, std::vector<value_type>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  TruncSeries scale(const value_type& c) const {
    TruncSeries s(ring_, order());
    for (std::size_t i = 0; i < order(); ++i) s.coeffs_[i] = ring_->mul(coeffs_[i], c);
    return s;
  }

  /// Formal derivative, known to order() - 1.
  TruncSeries derivative() const {
    const std::size_t n = order() == 0 ? 0 : order() - 1;
    TruncSeries s(ring_, n);
    for (std::size_t i = 0; i < n; ++i)
      s.coeffs_[i] = ring_->mul(ring_->from_int(static_cast<std::int64_t>(i + 1)), coeffs_[i + 1]);
    return s;
  }

  /// x -> x^{q^times}: coefficients through the ring Frobenius, exponents scaled.
  TruncSeries frobenius_power(unsigned times) const
    requires FrobeniusRing<R>
  {
    TruncSeries s(ring_, order());
    std::size_t stretch = 1;
    for (unsigned t = 0; t < times && stretch < order(); ++t) stretch *= ring_->frobenius_degree();
    for (std::size_t i = 0; i * stretch < order(); ++i) {
      auto v = coeffs_[i];
      for (unsigned t = 0; t < times; ++t) v = ring_->frobenius(v);
      s.coeffs_[i * stretch] = std::move(v);
    }
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check(a, b, "series add");
    TruncSeries s(a.ring_, a.order());
    for (std::size_t i = 0; i < a.order(); ++i) s.coeffs_[i] = a.ring_->add(a.coeffs_[i], b.coeffs_[i]);
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check(a, b, "series sub");
    TruncSeries s(a.ring_, a.order());
    for (std::size_t i = 0; i < a.order(); ++i) s.coeffs_[i] = a.ring_->sub(a.coeffs_[i], b.coeffs_[i]);
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& a) {
    TruncSeries s(a.ring_, a.order());
    for (std::size_t i = 0; i < a.order(); ++i) s.coeffs_[i] = a.ring_->neg(a.coeffs_[i]);
    return s;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check(a, b, "series mul");
    const auto& r = *a.ring_;
    const std::size_t n = a.order();
    TruncSeries s(a.ring_, n);
    const std::size_t vb = b.valuation();
    for (std::size_t i = a.valuation(); i + vb < n; ++i) {
      const auto& ai = a.coeffs_[i];
      if (r.is_zero(ai)) continue;
      for (std::size_t j = vb; i + j < n; ++j) s.coeffs_[i + j] = r.add(s.coeffs_[i + j], r.mul(ai, b.coeffs_[j]));
    }
    return s;
  }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order() == b.order() && same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
  }

 private:
  static void check(const TruncSeries& a, const TruncSeries& b, const char* where) {
    require_same_ring(a.ring_, b.ring_, where);
    if (a.order() != b.order()) throw std::invalid_argument(std::string(where) + ": truncation orders differ");
  }

  std::shared_ptr<const R> ring_;
  std::vector<value_type> coeffs_;
};

/// Multiplicative inverse; the constant term must be a unit.
template <Field R>
TruncSeries<R> series_inverse(const TruncSeries<R>& s) {
  const auto& r = s.ring();
  const std::size_t n = s.order();
  if (n == 0) return s;
  if (r.is_zero(s.coeff(0))) throw std::domain_error("series_inverse: constant term is not a unit");
  std::vector<std::size_t> support;
  for (std::size_t k = 1; k < n; ++k)
    if (!r.is_zero(s.coeff(k))) support.push_back(k);
  const auto c0 = r.inv(s.coeff(0));
  std::vector<typename R::value_type> b(n, r.zero());
  b[0] = c0;
  for (std::size_t m = 1; m < n; ++m) {
    auto acc = r.zero();
    for (std::size_t k : support) {
      if (k > m) break;
      acc = r.add(acc, r.mul(s.coeff(k), b[m - k]));
    }
    b[m] = r.neg(r.mul(acc, c0));
  }
  return TruncSeries<R>(s.ring_ptr(), n, std::move(b));
}

/// outer(inner(z)) truncated at the common order; inner(0) must vanish.
template <Ring R>
TruncSeries<R> series_compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  require_same_ring(outer.ring_ptr(), inner.ring_ptr(), "series_compose");
  if (outer.order() != inner.order()) throw std::invalid_argument("series_compose: truncation orders differ");
  const std::size_t n = outer.order();
  if (n == 0) return outer;
  if (!inner.ring().is_zero(inner.coeff(0))) throw std::domain_error("series_compose: inner series has a constant term");
  auto result = TruncSeries<R>::monomial(outer.ring_ptr(), n, outer.coeff(0), 0);
  auto power = TruncSeries<R>::one(outer.ring_ptr(), n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * inner;
    if (power.is_zero()) break;
    if (!outer.ring().is_zero(outer.coeff(k))) result += power.scale(outer.coeff(k));
  }
  return result;
}

}  // namespace carlitz
