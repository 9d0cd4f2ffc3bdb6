#pragma once

/**
 * @file witt.hpp
 * @brief Truncated unramified Witt rings W_k = W(A/p) / p^k.
 *
 * W_k is modelled as (Z/p^k)[T]/(g), where g is a lift of the minimal
 * polynomial over F_p of a primitive element theta of A/p. Reduction mod p
 * followed by T -> theta identifies W_k/p with A/p.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/integer.hpp"
#include "carlitz/residue.hpp"

namespace carlitz {

/// Coordinates over Z/p^k in the basis 1, T, ..., T^{m-1}.
struct WittElem {
  std::vector<std::uint64_t> c;
  friend bool operator==(const WittElem&, const WittElem&) = default;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WittRing {
 public:
  using value_type = WittElem;

  /// Choice of structural lift of the minimal polynomial.
  enum class Lift {
    naive,    // coefficients in [0, p)
    shifted,  // naive lift plus p on every non-leading coefficient
  };

  static constexpr unsigned kDefaultPrecision = 12;

  /// Largest k with p^k <= 2^63 (and at most 96).
  static unsigned max_precision(std::uint64_t p) {
    unsigned k = 0;
    unsigned __int128 v = 1;
    while (k < 96 && v * p <= (static_cast<unsigned __int128>(1) << 63)) {
      v *= p;
      ++k;
    }
    return k;
  }

  WittRing(ResidueFieldPtr field, unsigned k, Lift lift = Lift::naive) : field_(std::move(field)), k_(k), lift_(lift) {
    p_ = field_->characteristic();
    if (k_ < 1) throw std::invalid_argument("witt precision must be at least 1");
    if (k_ > max_precision(p_))
      throw PrecisionError("witt precision " + std::to_string(k_) + " exceeds the word-size cap " +
                           std::to_string(max_precision(p_)) + " for p = " + std::to_string(p_));
    pk_ = detail::ipow(p_, k_);
    m_ = field_->base()->r() * field_->degree();
    choose_theta();
    build_modulus();
    build_basis_change();
  }

  const ResidueFieldPtr& residue_field() const { return field_; }
  std::uint64_t p() const { return p_; }
  unsigned precision() const { return k_; }
  std::uint64_t modulus_pk() const { return pk_; }
  /// Rank over Z/p^k, r * d.
  unsigned rank() const { return m_; }
  Lift lift_choice() const { return lift_; }
  /// Primitive element of A/p over F_p corresponding to T.
  ResidueElem theta() const { return theta_; }
  /// Monic structural modulus g (ascending, length rank + 1).
  const std::vector<std::uint64_t>& structural_modulus() const { return g_; }

  WittElem zero() const { return WittElem{std::vector<std::uint64_t>(m_, 0)}; }
  WittElem one() const { return from_int(1); }
  WittElem from_int(std::int64_t n) const {
    auto z = zero();
    const auto m = static_cast<__int128>(pk_);
    z.c[0] = static_cast<std::uint64_t>(((static_cast<__int128>(n) % m) + m) % m);
    return z;
  }
  /// T itself.
  WittElem generator() const {
    auto z = zero();
    if (m_ == 1) {
      z.c[0] = reduce_int(pk_ - g_[0]);
    } else {
      z.c[1] = 1;
    }
    return z;
  }
  bool is_zero(const WittElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](std::uint64_t v) { return v == 0; });
  }

  WittElem add(const WittElem& a, const WittElem& b) const {
    WittElem out{std::vector<std::uint64_t>(m_)};
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint64_t s = a.c[i] + b.c[i];
      out.c[i] = s >= pk_ ? s - pk_ : s;
    }
    return out;
  }
  WittElem neg(const WittElem& a) const {
    WittElem out{std::vector<std::uint64_t>(m_)};
    for (unsigned i = 0; i < m_; ++i) out.c[i] = a.c[i] == 0 ? 0 : pk_ - a.c[i];
    return out;
  }
  WittElem sub(const WittElem& a, const WittElem& b) const { return add(a, neg(b)); }

  WittElem mul(const WittElem& a, const WittElem& b) const {
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
      if (a.c[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = addmod(prod[i + j], detail::mulmod(a.c[i], b.c[j], pk_));
    }
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned j = 0; j < m_; ++j) {
        const std::uint64_t t = detail::mulmod(c, g_[j], pk_);
        prod[k - m_ + j] = addmod(prod[k - m_ + j], t == 0 ? 0 : pk_ - t);
      }
    }
    prod.resize(m_);
    return WittElem{std::move(prod)};
  }

  WittElem scale(const WittElem& a, std::uint64_t s) const {
    WittElem out{std::vector<std::uint64_t>(m_)};
    s %= pk_;
    for (unsigned i = 0; i < m_; ++i) out.c[i] = detail::mulmod(a.c[i], s, pk_);
    return out;
  }

  WittElem pow(const WittElem& a, std::uint64_t e) const { return ring_pow(*this, a, e); }

  /// Inverse of an integer prime to p, as an element of Z/p^k.
  std::uint64_t inverse_integer(std::uint64_t n) const { return detail::inverse_mod(n % pk_, pk_); }

  /// Naive lift: the coordinates of x in powers of theta, read in [0, p).
  WittElem lift(ResidueElem x) const {
    const auto coords = field_->prime_coordinates(x);
    WittElem out = zero();
    for (unsigned i = 0; i < m_; ++i) {
      std::uint64_t acc = 0;
      for (unsigned j = 0; j < m_; ++j) acc = (acc + std::uint64_t{inv_basis_[i][j]} * coords[j]) % p_;
      out.c[i] = acc;
    }
    return out;
  }

  /// Reduction mod p followed by T -> theta.
  ResidueElem reduce(const WittElem& w) const {
    const auto& f = *field_;
    ResidueElem acc = f.zero();
    for (unsigned i = m_; i-- > 0;) acc = f.add(f.mul(acc, theta_), f.from_int(static_cast<std::int64_t>(w.c[i] % p_)));
    return acc;
  }

  friend bool operator==(const WittRing& a, const WittRing& b) {
    return a.k_ == b.k_ && a.g_ == b.g_ && a.theta_ == b.theta_ && *a.field_ == *b.field_;
  }

 private:
  std::uint64_t addmod(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= pk_ ? s - pk_ : s;
  }
  std::uint64_t reduce_int(std::uint64_t v) const { return v % pk_; }

  unsigned frobenius_orbit(ResidueElem x) const {
    ResidueElem y = x;
    for (unsigned i = 1; i <= m_; ++i) {
      y = field_->pow(y, p_);
      if (y == x) return i;
    }
    return m_ + 1;
  }

  // theta = t, then t + c*a for c in F_q, then any element in code order.
  void choose_theta() {
    const auto& f = *field_;
    const auto& fq = *f.base();
    std::vector<ResidueElem> candidates{f.t_bar()};
    for (std::uint32_t c = 1; c < fq.q(); ++c)
      candidates.push_back(f.add(f.t_bar(), f.from_fq(fq.mul(FqElem{c}, fq.generator()))));
    for (const auto& cand : candidates) {
      if (frobenius_orbit(cand) == m_) {
        theta_ = cand;
        return;
      }
    }
    for (std::uint32_t code = 1; code < f.size(); ++code) {
      if (frobenius_orbit(ResidueElem{code}) == m_) {
        theta_ = ResidueElem{code};
        return;
      }
    }
    throw std::logic_error("no primitive element over F_p");
  }

  // Minimal polynomial prod_i (x - theta^{p^i}) has F_p coefficients.
  void build_modulus() {
    const auto& f = *field_;
    std::vector<ResidueElem> poly{f.one()};
    ResidueElem conj = theta_;
    for (unsigned i = 0; i < m_; ++i) {
      std::vector<ResidueElem> next(poly.size() + 1, f.zero());
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = f.add(next[j + 1], poly[j]);
        next[j] = f.sub(next[j], f.mul(poly[j], conj));
      }
      poly = std::move(next);
      conj = f.pow(conj, p_);
    }
    g_.assign(m_ + 1, 0);
    for (unsigned j = 0; j <= m_; ++j) {
      if (poly[j].code >= p_) throw std::logic_error("minimal polynomial has coefficients outside F_p");
      g_[j] = poly[j].code;
      if (lift_ == Lift::shifted && j < m_) g_[j] = reduce_int(g_[j] + p_);
    }
  }

  // Inverse over F_p of the matrix whose column j holds the coordinates of theta^j.
  void build_basis_change() {
    const auto& f = *field_;
    std::vector<std::vector<std::uint64_t>> a(m_, std::vector<std::uint64_t>(2 * m_, 0));
    ResidueElem pw = f.one();
    for (unsigned j = 0; j < m_; ++j) {
      const auto coords = f.prime_coordinates(pw);
      for (unsigned i = 0; i < m_; ++i) a[i][j] = coords[i];
      pw = f.mul(pw, theta_);
    }
    for (unsigned i = 0; i < m_; ++i) a[i][m_ + i] = 1;
    for (unsigned col = 0; col < m_; ++col) {
      unsigned piv = col;
      while (piv < m_ && a[piv][col] == 0) ++piv;
      if (piv == m_) throw std::logic_error("basis change matrix is singular");
      std::swap(a[piv], a[col]);
      const std::uint64_t inv = detail::inverse_mod(a[col][col], p_);
      for (auto& v : a[col]) v = v * inv % p_;
      for (unsigned row = 0; row < m_; ++row) {
        if (row == col || a[row][col] == 0) continue;
        const std::uint64_t factor = a[row][col];
        for (unsigned j = 0; j < 2 * m_; ++j) a[row][j] = (a[row][j] + (p_ - factor) * a[col][j]) % p_;
      }
    }
    inv_basis_.assign(m_, std::vector<std::uint32_t>(m_));
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) inv_basis_[i][j] = static_cast<std::uint32_t>(a[i][m_ + j]);
  }

  ResidueFieldPtr field_;
  unsigned k_;
  Lift lift_;
  std::uint64_t p_ = 2;
  std::uint64_t pk_ = 2;
  unsigned m_ = 1;
  ResidueElem theta_;
  std::vector<std::uint64_t> g_;
  std::vector<std::vector<std::uint32_t>> inv_basis_;
};

using WittRingPtr = std::shared_ptr<const WittRing>;

inline WittRingPtr witt_ring(const ResidueFieldPtr& field, unsigned k = WittRing::kDefaultPrecision,
                             WittRing::Lift lift = WittRing::Lift::naive) {
  return std::make_shared<const WittRing>(field, k, lift);
}

inline WittRingPtr witt_ring(const Poly& prime, unsigned k = WittRing::kDefaultPrecision) {
  return witt_ring(residue_field(prime), k);
}

/**
 * Teichmüller lift: the unique y with y^{q^d} = y and y = x mod p. Starting
 * from any lift, each application of y -> y^{q^d} gains one p-adic digit.
 */
inline WittElem teichmuller(ResidueElem x, const WittRing& w) {
  if (x.code == 0) return w.zero();
  const std::uint64_t order = w.residue_field()->size();
  WittElem y = w.lift(x);
  for (unsigned i = 0; i <= w.precision() + 1; ++i) {
    WittElem next = w.pow(y, order);
    if (next == y) return y;
    y = std::move(next);
  }
  throw std::logic_error("teichmuller iteration did not stabilise");
}

/// Largest v <= k with p^v dividing every coordinate; k means zero at this precision.
inline unsigned valuation(const WittElem& x, const WittRing& w) {
  unsigned best = w.precision();
  for (auto c : x.c) {
    if (c == 0) continue;
    unsigned v = 0;
    while (c % w.p() == 0) {
      c /= w.p();
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

}  // namespace carlitz
