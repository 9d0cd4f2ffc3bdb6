#pragma once

/**
 * @file poly_fq.hpp
 * @brief The ring A = F_q[t]: field construction, irreducibility and
 * enumeration of monic primes.
 */

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/integer.hpp"
#include "carlitz/polynomial.hpp"

namespace carlitz {

/// Element of A = F_q[t].
using Poly = Polynomial<FieldDescriptor>;

/// Ring context for A itself, so that A can serve as a coefficient ring.
class PolyRing {
 public:
  using value_type = Poly;

  explicit PolyRing(FieldPtr field) : field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }

  Poly zero() const { return Poly(field_); }
  Poly one() const { return Poly::constant(field_, field_->one()); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly from_int(std::int64_t n) const { return Poly::constant(field_, field_->from_int(n)); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  std::uint32_t characteristic() const { return field_->p(); }

  /// a -> a^q: coefficients are fixed by the q-power map, exponents scale by q.
  Poly frobenius(const Poly& a) const {
    if (a.is_zero()) return a;
    const std::size_t q = field_->q();
    std::vector<FqElem> v((a.size() - 1) * q + 1, field_->zero());
    for (std::size_t i = 0; i < a.size(); ++i) v[i * q] = a.coeff(i);
    return Poly(field_, std::move(v));
  }

  std::size_t frobenius_degree() const { return field_->q(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return *a.field_ == *b.field_; }

 private:
  FieldPtr field_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

inline Poly poly_t(const FieldPtr& f) { return Poly::variable(f); }

/// Builds a polynomial from integer coefficients (ascending, reduced mod p).
inline Poly poly_from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<FqElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f->from_int(c));
  return Poly(f, std::move(v));
}

/// Canonical order: degree first, then coefficient codes from the leading
/// term down, the constant term compared last.
inline bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    const auto x = a.coeff(i).code, y = b.coeff(i).code;
    if (x != y) return x < y;
  }
  return false;
}

/**
 * Distinct-degree irreducibility test: f of degree n is irreducible iff
 * t^{q^n} = t mod f and gcd(t^{q^{n/l}} - t, f) = 1 for every prime l | n.
 */
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
  const auto n = static_cast<unsigned>(f.degree());
  const auto& fld = f.ring_ptr();
  const std::uint64_t q = fld->q();
  const Poly t = poly_t(fld) % f;
  // frob[i] = t^{q^i} mod f
  std::vector<Poly> frob{t};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(pow_mod(frob.back(), q, f));
  if (!(frob[n] == t)) return false;
  for (auto l : detail::prime_divisors(n)) {
    const Poly g = gcd(frob[n / l] - t, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// All monic irreducibles of the given degree, in canonical order.
inline std::vector<Poly> monic_irreducibles(const FieldPtr& f, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("monic_irreducibles: degree must be positive");
  const std::uint64_t q = f->q();
  const std::uint64_t count = detail::ipow(q, degree);
  std::vector<Poly> out;
  std::vector<FqElem> coeffs(degree + 1, f->zero());
  coeffs[degree] = f->one();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      coeffs[i] = FqElem{static_cast<std::uint32_t>(c % q)};
      c /= q;
    }
    Poly cand(f, coeffs);
    if (is_irreducible(cand)) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Number of monic irreducibles of degree d over F_q (necklace count).
inline std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
  std::int64_t total = 0;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) total += detail::moebius(d / e) * static_cast<std::int64_t>(detail::ipow(q, e));
  return static_cast<std::uint64_t>(total) / d;
}

namespace detail {

inline FieldPtr prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return std::make_shared<const FieldDescriptor>(p, 1, std::vector<std::uint32_t>{0, 1});
}

inline bool is_primitive_modulus(const Poly& m) {
  if (!is_irreducible(m)) return false;
  const std::uint64_t order = ipow(m.ring().q(), static_cast<unsigned>(m.degree())) - 1;
  const Poly x = poly_t(m.ring_ptr());
  const Poly one = Poly::constant(m.ring_ptr(), m.ring().one());
  if (!(pow_mod(x, order, m) == one)) return false;
  for (auto l : prime_divisors(order))
    if (pow_mod(x, order / l, m) == one) return false;
  return true;
}

/**
 * Default modulus for F_{p^r}: the primitive polynomial of least weight,
 * ties broken by the smallest code of the lower coefficients. For q <= 16
 * this yields x^2+x+1, x^3+x+1, x^4+x+1 (p = 2) and x^2+x+2 (p = 3).
 */
inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned r) {
  if (r == 1) return {0, 1};
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, r}); it != cache.end()) return it->second;
  const FieldPtr fp = prime_field(p);
  const std::uint64_t count = ipow(p, r);
  for (unsigned weight = 2; weight <= r + 1; ++weight) {
    for (std::uint64_t code = 1; code < count; ++code) {
      std::vector<std::uint32_t> c(r + 1, 0);
      c[r] = 1;
      std::uint64_t x = code;
      unsigned w = 1;
      for (unsigned i = 0; i < r; ++i) {
        c[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
        if (c[i] != 0) ++w;
      }
      if (w != weight || c[0] == 0) continue;
      std::vector<std::int64_t> ints(c.begin(), c.end());
      if (is_primitive_modulus(poly_from_ints(fp, ints))) return cache[{p, r}] = c;
    }
  }
  throw std::logic_error("no primitive polynomial found");
}

}  // namespace detail

/**
 * Constructs F_q with q = p^r. When no modulus is supplied the built-in
 * choice of detail::default_modulus is used. A supplied modulus (ascending
 * coefficients over F_p) must be monic of degree r and irreducible.
 */
inline FieldPtr fq_make(std::uint32_t p, unsigned r, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  if (r == 0) throw std::invalid_argument("extension degree must be positive");
  const FieldPtr fp = detail::prime_field(p);
  if (detail::ipow(p, r) > FieldDescriptor::kMaxOrder || r > 16)
    throw std::invalid_argument("unsupported field order: q must not exceed 2^16");
  if (r == 1 && !modulus) return fp;
  std::vector<std::uint32_t> m = modulus ? *modulus : detail::default_modulus(p, r);
  while (!m.empty() && m.back() % p == 0) m.pop_back();
  for (auto& c : m) c %= p;
  if (m.size() != r + 1 || m.back() != 1) throw std::invalid_argument("modulus must be monic of degree " + std::to_string(r));
  std::vector<std::int64_t> ints(m.begin(), m.end());
  if (r > 1 && !is_irreducible(poly_from_ints(fp, ints))) throw std::invalid_argument("modulus is reducible over F_p");
  if (r == 1 && m == std::vector<std::uint32_t>{0, 1}) return fp;
  return std::make_shared<const FieldDescriptor>(p, r, std::move(m));
}

/// Splits q = p^r; throws if q is not a prime power.
inline std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  const auto primes = detail::prime_divisors(q);
  if (q < 2 || primes.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  unsigned r = 0;
  for (std::uint64_t x = q; x > 1; x /= primes[0]) ++r;
  return {static_cast<std::uint32_t>(primes[0]), r};
}

}  // namespace carlitz
