#pragma once

/**
 * @file lseries.hpp
 * @brief L-series of powers of the Teichmüller character over W_k.
 *
 * For n with (q-1) | n and (q^d-1) not dividing n,
 *   L(T, w^{-n}) = (1-T)^{-1} S_n(T),   S_n(T) = sum_{a monic, deg a < d} w(a)^{-n} T^{deg a},
 * and the value at T = 1 has the closed form
 *   L(1, w^{-n}) = 1/(q-1) sum_{g in G} deg(g) w(g)^{-n}.
 * Summing over the unit multiples of monic a shows the closed form equals
 * S_n'(1), hence -Q_n(1) where S_n = (1-T) Q_n. The closed form is the value
 * reported; Q_n(1) is kept as a cross-check.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/polynomial.hpp"
#include "carlitz/residue.hpp"
#include "carlitz/witt.hpp"

namespace carlitz {

using WittPoly = Polynomial<WittRing>;

class CharacterContext {
 public:
  CharacterContext(ResidueFieldPtr field, unsigned precision = WittRing::kDefaultPrecision,
                   WittRing::Lift lift = WittRing::Lift::naive)
      : field_(std::move(field)), witt_(witt_ring(field_, precision, lift)) {
    const std::uint32_t order = field_->size() - 1;
    group_.reserve(order);
    deg_.reserve(order);
    for (std::uint32_t code = 1; code <= order; ++code) {
      const ResidueElem g{code};
      group_.push_back(g);
      deg_.push_back(static_cast<unsigned>(field_->rep_degree(g)));
      if (field_->coefficient(g, deg_.back()) == field_->base()->one()) monic_.push_back(g);
    }
    const WittElem omega = carlitz::teichmuller(field_->primitive_element(), *witt_);
    omega_pow_.reserve(order);
    WittElem acc = witt_->one();
    for (std::uint32_t j = 0; j < order; ++j) {
      omega_pow_.push_back(acc);
      acc = witt_->mul(acc, omega);
    }
    if (!(acc == witt_->one())) throw std::logic_error("Teichmüller image of a primitive element has the wrong order");
  }

  const ResidueFieldPtr& residue_field() const { return field_; }
  const Poly& prime() const { return field_->prime(); }
  const WittRing& witt() const { return *witt_; }
  const WittRingPtr& witt_ptr() const { return witt_; }
  unsigned precision() const { return witt_->precision(); }

  /// q^d - 1.
  std::uint32_t group_order() const { return field_->size() - 1; }
  /// G = (A/p)^x, ordered by residue code.
  const std::vector<ResidueElem>& group() const { return group_; }
  /// Classes of monic a with deg a < d.
  const std::vector<ResidueElem>& monic_representatives() const { return monic_; }
  /// Degree of the representative of g in A^{<d}.
  unsigned deg(ResidueElem g) const { return deg_.at(g.code - 1); }

  /// w(g)^e for any integer e, read off the table of powers of w(primitive).
  const WittElem& teichmuller_power(ResidueElem g, std::int64_t e) const {
    if (g.code == 0) throw std::domain_error("teichmuller_power: zero has no character value");
    const auto m = static_cast<std::int64_t>(group_order());
    const std::int64_t lg = field_->log(g);
    const std::int64_t em = ((e % m) + m) % m;
    return omega_pow_[static_cast<std::size_t>((lg * em) % m)];
  }
  const WittElem& teichmuller(ResidueElem g) const { return teichmuller_power(g, 1); }

 private:
  ResidueFieldPtr field_;
  WittRingPtr witt_;
  std::vector<ResidueElem> group_;
  std::vector<unsigned> deg_;
  std::vector<ResidueElem> monic_;
  std::vector<WittElem> omega_pow_;
};

inline CharacterContext character_context(const Poly& prime, unsigned precision = WittRing::kDefaultPrecision) {
  return CharacterContext(residue_field(prime), precision);
}

struct LReport {
  unsigned n;
  /// S_n(T), ascending in T, degree < d.
  WittPoly numerator;
  /// Q_n(T) = S_n(T) / (1 - T) when (q-1) | n.
  std::optional<WittPoly> quotient;
  /// L(1, w^{-n}) by the closed formula, when (q-1) | n.
  std::optional<WittElem> value;
  std::optional<unsigned> valuation;
};

namespace detail {

inline void require_index_range(const CharacterContext& ctx, unsigned n) {
  if (n < 1 || n + 1 >= ctx.residue_field()->size())
    throw std::out_of_range("character index " + std::to_string(n) + " outside 1 .. q^d - 2");
}

inline bool divisible_by_q_minus_1(const CharacterContext& ctx, unsigned n) {
  return n % (ctx.residue_field()->base()->q() - 1) == 0;
}

}  // namespace detail

/// S_n(T) = sum over monic a of degree < d of w(a)^{-n} T^{deg a}.
inline WittPoly l_numerator(const CharacterContext& ctx, unsigned n) {
  detail::require_index_range(ctx, n);
  const auto& w = ctx.witt();
  std::vector<WittElem> coeffs(ctx.residue_field()->degree(), w.zero());
  for (const auto a : ctx.monic_representatives()) {
    auto& slot = coeffs[ctx.deg(a)];
    slot = w.add(slot, ctx.teichmuller_power(a, -static_cast<std::int64_t>(n)));
  }
  return WittPoly(ctx.witt_ptr(), std::move(coeffs));
}

/// 1/(q-1) sum_g deg(g) w(g)^{-n}.
inline WittElem l_value_at_one(const CharacterContext& ctx, unsigned n) {
  detail::require_index_range(ctx, n);
  if (!detail::divisible_by_q_minus_1(ctx, n))
    throw std::domain_error("l_value_at_one: n must be divisible by q - 1");
  const auto& w = ctx.witt();
  std::vector<WittElem> by_degree(ctx.residue_field()->degree(), w.zero());
  for (const auto g : ctx.group()) {
    auto& slot = by_degree[ctx.deg(g)];
    slot = w.add(slot, ctx.teichmuller_power(g, -static_cast<std::int64_t>(n)));
  }
  WittElem acc = w.zero();
  for (std::size_t j = 1; j < by_degree.size(); ++j) acc = w.add(acc, w.scale(by_degree[j], j));
  return w.scale(acc, w.inverse_integer(ctx.residue_field()->base()->q() - 1));
}

/// Q_n with S_n = (1 - T) Q_n. Throws if (1 - T) does not divide S_n.
inline WittPoly l_quotient(const WittPoly& numerator) {
  const auto& w = numerator.ring();
  const auto ring = numerator.ring_ptr();
  const WittPoly t_minus_one(ring, {w.neg(w.one()), w.one()});
  auto [quo, rem] = divrem(numerator, t_minus_one);
  if (!rem.is_zero()) throw std::logic_error("S_n(1) is nonzero; (1 - T) does not divide S_n");
  return -quo;
}

inline LReport l_char_sum(const CharacterContext& ctx, unsigned n) {
  LReport r{n, l_numerator(ctx, n), std::nullopt, std::nullopt, std::nullopt};
  if (detail::divisible_by_q_minus_1(ctx, n)) {
    r.quotient = l_quotient(r.numerator);
    r.value = l_value_at_one(ctx, n);
    r.valuation = valuation(*r.value, ctx.witt());
  }
  return r;
}

/// Raw valuation of S_n(1); meaningful as data only, for any n in range.
inline unsigned raw_numerator_valuation(const CharacterContext& ctx, unsigned n) {
  const auto s = l_numerator(ctx, n);
  return valuation(s.eval(ctx.witt().one()), ctx.witt());
}

/// Next rung of the precision ladder 12, 24, 48, ... capped by the word size.
inline std::optional<unsigned> next_precision(unsigned k, std::uint64_t p) {
  const unsigned cap = WittRing::max_precision(p);
  if (k >= cap) return std::nullopt;
  return std::min(2 * k, cap);
}

struct EigenLength {
  unsigned length = 0;
  /// Witt precision at which the valuation was resolved.
  unsigned precision = 0;
};

/**
 * Valuation of L(1, w^{-n}), i.e. the length of the w^n component of
 * W (x) Pic^0. A saturated valuation is retried at the next precision.
 */
inline EigenLength pic_eigenspace_length(const CharacterContext& ctx, unsigned n) {
  const unsigned v = valuation(l_value_at_one(ctx, n), ctx.witt());
  if (v < ctx.precision()) return {v, ctx.precision()};
  std::optional<unsigned> k = next_precision(ctx.precision(), ctx.witt().p());
  while (k) {
    const CharacterContext wider(ctx.residue_field(), *k, ctx.witt().lift_choice());
    const unsigned vk = valuation(l_value_at_one(wider, n), wider.witt());
    if (vk < *k) return {vk, *k};
    k = next_precision(*k, ctx.witt().p());
  }
  throw PrecisionError("valuation of L(1) saturates at the maximal Witt precision for n = " + std::to_string(n));
}

}  // namespace carlitz
