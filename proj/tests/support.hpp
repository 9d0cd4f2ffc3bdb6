#pragma once

// Random generators shared by the unit suites and the acceptance gate.

#include <cstdint>
#include <random>
#include <vector>

#include "carlitz/carlitz.hpp"

namespace carlitz::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 0x5eed'c0de'2024ULL;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Poly random_monic(Rng& rng, const FieldPtr& f, unsigned degree) {
  std::vector<FqElem> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) c[i] = FqElem{static_cast<std::uint32_t>(uniform(rng, 0, f->q() - 1))};
  c[degree] = f->one();
  return Poly(f, std::move(c));
}

inline Poly random_poly(Rng& rng, const FieldPtr& f, unsigned max_degree) {
  std::vector<FqElem> c(uniform(rng, 0, max_degree + 1));
  for (auto& x : c) x = FqElem{static_cast<std::uint32_t>(uniform(rng, 0, f->q() - 1))};
  return Poly(f, std::move(c));
}

inline Poly random_irreducible(Rng& rng, const FieldPtr& f, unsigned degree) {
  for (;;) {
    Poly g = random_monic(rng, f, degree);
    if (is_irreducible(g)) return g;
  }
}

/// F_q for q drawn from a fixed menu; prime powers get a random modulus.
inline FieldPtr random_field(Rng& rng) {
  static const std::vector<unsigned> menu{2, 3, 4, 5, 7, 8, 9, 16, 25};
  const unsigned q = menu[uniform(rng, 0, menu.size() - 1)];
  const auto [p, r] = split_prime_power(q);
  if (r == 1) return fq_make(p, 1);
  const Poly m = random_irreducible(rng, detail::prime_field(p), r);
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : m.coefficients()) coeffs.push_back(c.code);
  return fq_make(p, r, coeffs);
}

inline FqElem random_fq(Rng& rng, const FieldDescriptor& f) {
  return FqElem{static_cast<std::uint32_t>(uniform(rng, 0, f.q() - 1))};
}

inline ResidueElem random_residue(Rng& rng, const ResidueField& f, bool nonzero = false) {
  return ResidueElem{static_cast<std::uint32_t>(uniform(rng, nonzero ? 1 : 0, f.size() - 1))};
}

/// A random prime with q^d <= max_size and d >= min_degree.
inline Poly random_prime(Rng& rng, std::uint64_t max_size = 256, unsigned min_degree = 1) {
  for (;;) {
    const FieldPtr f = random_field(rng);
    unsigned top = 0;
    for (std::uint64_t s = f->q(); s <= max_size; s *= f->q()) ++top;
    if (top < min_degree) continue;
    return random_irreducible(rng, f, static_cast<unsigned>(uniform(rng, min_degree, top)));
  }
}

template <typename R>
TruncSeries<R> random_series(Rng& rng, const std::shared_ptr<const R>& ring, std::size_t order,
                             std::size_t min_valuation = 0) {
  TruncSeries<R> s(ring, order);
  for (std::size_t i = min_valuation; i < order; ++i) s.set_coeff(i, random_residue(rng, *ring));
  return s;
}

inline WittElem random_witt(Rng& rng, const WittRing& w) {
  WittElem x = w.zero();
  for (auto& c : x.c) c = uniform(rng, 0, w.modulus_pk() - 1);
  return x;
}

/// All monic irreducibles with q^d <= max_size for q in {2, 3, 4, 5}.
inline std::vector<Poly> oracle_range_primes(std::uint64_t max_size = 256) {
  std::vector<Poly> out;
  for (unsigned q : {2U, 3U, 4U, 5U}) {
    const auto [p, r] = split_prime_power(q);
    const FieldPtr f = fq_make(p, r);
    std::uint64_t size = q;
    for (unsigned d = 1; size <= max_size; ++d, size *= q)
      for (auto& g : monic_irreducibles(f, d)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace carlitz::testing
