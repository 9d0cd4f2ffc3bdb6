#pragma once

/**
 * @file ring.hpp
 * @brief Ring-context concepts shared by every coefficient domain.
 *
 * Elements are plain values (integer codes, coefficient vectors); the ring
 * context object owns the structure needed to combine them. Generic
 * containers (Polynomial, TruncSeries, TwistedPoly) hold a shared pointer to
 * an immutable context and forward all arithmetic to it.
 */

#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace carlitz {

template <typename R>
concept Ring = requires(const R& r, const typename R::value_type& a, const typename R::value_type& b,
                        std::int64_t n) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { a == b } -> std::convertible_to<bool>;
  { r == r } -> std::convertible_to<bool>;
};

template <typename R>
concept Field = Ring<R> && requires(const R& r, const typename R::value_type& a) {
  { r.inv(a) } -> std::convertible_to<typename R::value_type>;
};

/// Rings carrying the q-power Frobenius of the base field F_q (x -> x^q).
template <typename R>
concept FrobeniusRing = Ring<R> && requires(const R& r, const typename R::value_type& a) {
  { r.frobenius(a) } -> std::convertible_to<typename R::value_type>;
  { r.frobenius_degree() } -> std::convertible_to<std::size_t>;
};

/// Rings whose characteristic is a known prime (used by formal derivatives).
template <typename R>
concept CharacteristicRing = Ring<R> && requires(const R& r) {
  { r.characteristic() } -> std::convertible_to<std::uint64_t>;
};

/// Two handles name the same ring if they alias or compare structurally equal.
template <typename R>
bool same_ring(const std::shared_ptr<const R>& a, const std::shared_ptr<const R>& b) {
  return a == b || (a && b && *a == *b);
}

template <typename R>
void require_same_ring(const std::shared_ptr<const R>& a, const std::shared_ptr<const R>& b,
                       const char* where) {
  if (!same_ring(a, b)) throw std::invalid_argument(std::string(where) + ": operands over different rings");
}

/// Square-and-multiply in any ring context.
template <Ring R>
typename R::value_type ring_pow(const R& r, typename R::value_type base, std::uint64_t e) {
  auto acc = r.one();
  while (e != 0) {
    if (e & 1U) acc = r.mul(acc, base);
    e >>= 1U;
    if (e != 0) base = r.mul(base, base);
  }
  return acc;
}

}  // namespace carlitz
