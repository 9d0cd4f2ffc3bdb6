#pragma once

/**
 * @file twisted.hpp
 * @brief Twisted (q-linearized) polynomials and the Carlitz action.
 *
 * sum c_i F^i acts on x as sum c_i x^{q^i}. Products are compositions and
 * obey F c = c^q F.
 */

#include <memory>
#include <stdexcept>
#include <vector>

#include "carlitz/poly_fq.hpp"
#include "carlitz/ring.hpp"
#include "carlitz/series.hpp"

namespace carlitz {

template <FrobeniusRing R>
class TwistedPoly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit TwistedPoly(std::shared_ptr<const R> ring) : ring_(std::move(ring)) {}

  TwistedPoly(std::shared_ptr<const R> ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  static TwistedPoly constant(std::shared_ptr<const R> ring, value_type c) {
    return TwistedPoly(std::move(ring), std::vector<value_type>{std::move(c)});
  }

  /// The Frobenius F itself.
  static TwistedPoly frobenius(std::shared_ptr<const R> ring) {
    auto z = ring->zero();
    auto o = ring->one();
    return TwistedPoly(std::move(ring), std::vector<value_type>{std::move(z), std::move(o)});
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  /// Degree in F (kDegreeOfZero for the zero operator).
  int degree() const { return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
  std::span<const value_type> coefficients() const { return coeffs_; }

  friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
    require_same_ring(a.ring_, b.ring_, "twisted add");
    const auto& r = *a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.add(a.coeff(i), b.coeff(i));
    return TwistedPoly(a.ring_, std::move(v));
  }

  friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) {
    require_same_ring(a.ring_, b.ring_, "twisted sub");
    const auto& r = *a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.sub(a.coeff(i), b.coeff(i));
    return TwistedPoly(a.ring_, std::move(v));
  }

  /// Composition: (a_i F^i)(b_j F^j) = a_i b_j^{q^i} F^{i+j}.
  friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
    require_same_ring(a.ring_, b.ring_, "twisted mul");
    if (a.is_zero() || b.is_zero()) return TwistedPoly(a.ring_);
    const auto& r = *a.ring_;
    std::vector<value_type> v(a.coeffs_.size() + b.coeffs_.size() - 1, r.zero());
    std::vector<value_type> twisted(b.coeffs_.begin(), b.coeffs_.end());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (i > 0)
        for (auto& c : twisted) c = r.frobenius(c);
      if (r.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < twisted.size(); ++j) v[i + j] = r.add(v[i + j], r.mul(a.coeffs_[i], twisted[j]));
    }
    return TwistedPoly(a.ring_, std::move(v));
  }

  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const R> ring_;
  std::vector<value_type> coeffs_;
};

/// sum c_i x^{q^i} for a ring element x.
template <FrobeniusRing R>
typename R::value_type twisted_apply(const TwistedPoly<R>& op, typename R::value_type x) {
  const auto& r = op.ring();
  auto acc = r.zero();
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    if (i > 0) x = r.frobenius(x);
    acc = r.add(acc, r.mul(op.coefficients()[i], x));
  }
  return acc;
}

/// sum c_i x^{q^i} for a series over the operator's own coefficient ring.
template <FrobeniusRing R>
TruncSeries<R> twisted_apply(const TwistedPoly<R>& op, const TruncSeries<R>& x) {
  require_same_ring(op.ring_ptr(), x.ring_ptr(), "twisted_apply");
  TruncSeries<R> acc(x.ring_ptr(), x.order());
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    const auto& c = op.coefficients()[i];
    if (op.ring().is_zero(c)) continue;
    acc += x.frobenius_power(static_cast<unsigned>(i)).scale(c);
  }
  return acc;
}

/// sum m(c_i) x^{q^i}, where m carries operator coefficients into series
/// over x's ring (e.g. evaluation of polynomials in t at a series).
template <FrobeniusRing R, FrobeniusRing S, typename CoeffMap>
TruncSeries<S> twisted_apply(const TwistedPoly<R>& op, const TruncSeries<S>& x, CoeffMap&& m) {
  TruncSeries<S> acc(x.ring_ptr(), x.order());
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    const auto& c = op.coefficients()[i];
    if (op.ring().is_zero(c)) continue;
    acc += m(c) * x.frobenius_power(static_cast<unsigned>(i));
  }
  return acc;
}

/// Reduces every coefficient through a ring map.
template <FrobeniusRing R, FrobeniusRing S, typename Map>
TwistedPoly<S> map_coefficients(const TwistedPoly<R>& op, std::shared_ptr<const S> target, Map&& m) {
  std::vector<typename S::value_type> v;
  for (const auto& c : op.coefficients()) v.push_back(m(c));
  return TwistedPoly<S>(std::move(target), std::move(v));
}

/**
 * phi(a) for a in A: the image under the F_q-algebra map with
 * phi(t) = t + F. Coefficients live in A; c_0 = a and the F-degree is deg a.
 */
inline TwistedPoly<PolyRing> carlitz_action(const Poly& a) {
  const auto ring = std::make_shared<const PolyRing>(a.ring_ptr());
  if (a.is_zero()) return TwistedPoly<PolyRing>(ring);
  const auto phi_t = TwistedPoly<PolyRing>(ring, {poly_t(a.ring_ptr()), ring->one()});
  auto constant = [&](FqElem c) { return TwistedPoly<PolyRing>::constant(ring, Poly::constant(a.ring_ptr(), c)); };
  auto acc = constant(a.leading());
  for (std::size_t j = a.size() - 1; j-- > 0;) acc = acc * phi_t + constant(a.coeff(j));
  return acc;
}

}  // namespace carlitz
