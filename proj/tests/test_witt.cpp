#include <gtest/gtest.h>

#include "properties.hpp"

using namespace carlitz;
using carlitz::testing::kSeed;
using carlitz::testing::Rng;

namespace {

constexpr unsigned kCases = 1000;

void expect_law(const carlitz::testing::LawResult& r) {
  EXPECT_EQ(r.cases, kCases) << r.name;
  EXPECT_EQ(r.failures, 0U) << r.name << ": " << r.first_failure;
}

Poly P(unsigned q, const char* text) {
  const auto [p, r] = split_prime_power(q);
  return parse_poly(fq_make(p, r), text);
}

}  // namespace

TEST(WittRing, QuadraticExtensionOfZ16) {
  const auto field = residue_field(P(2, "t^2 + t + 1"));
  const auto w = witt_ring(field, 4);
  EXPECT_EQ(w->modulus_pk(), 16U);
  EXPECT_EQ(w->rank(), 2U);
  EXPECT_EQ(w->theta(), field->t_bar());
  EXPECT_EQ(w->structural_modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  // T^3 = 1 from T^2 = -T - 1.
  const WittElem T = w->generator();
  EXPECT_EQ(w->pow(T, 3), w->one());
  EXPECT_EQ(w->mul(T, T), w->sub(w->neg(T), w->one()));
}

TEST(WittRing, DegreeOneIsIntegersModPk) {
  const auto w = witt_ring(P(2, "t"), 3);
  EXPECT_EQ(w->rank(), 1U);
  EXPECT_EQ(w->modulus_pk(), 8U);
  EXPECT_EQ(w->add(w->from_int(5), w->from_int(6)), w->from_int(3));
  EXPECT_EQ(w->mul(w->from_int(3), w->from_int(3)), w->one());
}

TEST(WittRing, F4AtDegreeOneUsesTheFieldGenerator) {
  const auto field = residue_field(P(4, "t"));
  const auto w = witt_ring(field, 6);
  EXPECT_EQ(w->rank(), 2U);
  EXPECT_EQ(w->theta(), field->from_fq(field->base()->generator()));
  EXPECT_EQ(w->structural_modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
}

TEST(WittRing, ShiftedLiftAddsPOffTheLeadingTerm) {
  const auto field = residue_field(P(3, "t^2 + 1"));
  const auto naive = witt_ring(field, 5, WittRing::Lift::naive);
  const auto shifted = witt_ring(field, 5, WittRing::Lift::shifted);
  const auto& g = naive->structural_modulus();
  const auto& h = shifted->structural_modulus();
  ASSERT_EQ(g.size(), h.size());
  for (std::size_t j = 0; j + 1 < g.size(); ++j) EXPECT_EQ(h[j], (g[j] + 3) % naive->modulus_pk());
  EXPECT_EQ(h.back(), 1U);
  EXPECT_FALSE(*naive == *shifted);
}

TEST(WittRing, PrecisionBounds) {
  EXPECT_EQ(WittRing::max_precision(2), 63U);
  EXPECT_EQ(WittRing::max_precision(3), 39U);
  const auto field = residue_field(P(2, "t^2 + t + 1"));
  EXPECT_THROW(WittRing(field, 64), PrecisionError);
  EXPECT_THROW(WittRing(field, 0), std::invalid_argument);
  EXPECT_NO_THROW(WittRing(field, 63));
  EXPECT_FALSE(next_precision(63, 2).has_value());
  EXPECT_EQ(next_precision(12, 2), 24U);
  EXPECT_EQ(next_precision(48, 2), 63U);
}

TEST(WittRing, LiftReduceRoundTrip) {
  Rng rng(kSeed);
  for (unsigned i = 0; i < kCases; ++i) {
    const auto field = residue_field(carlitz::testing::random_prime(rng, 256));
    const auto w = witt_ring(field, static_cast<unsigned>(carlitz::testing::uniform(rng, 1, 10)));
    const ResidueElem x = carlitz::testing::random_residue(rng, *field);
    ASSERT_EQ(w->reduce(w->lift(x)), x);
  }
}

TEST(Teichmuller, Examples) {
  const auto field = residue_field(P(2, "t^2 + t + 1"));
  const auto w = witt_ring(field, 4);
  EXPECT_EQ(teichmuller(field->one(), *w), w->one());
  EXPECT_EQ(teichmuller(field->zero(), *w), w->zero());
  const WittElem T = w->generator();
  const ResidueElem t = field->t_bar();
  const ResidueElem t1 = field->add(t, field->one());
  EXPECT_EQ(teichmuller(t, *w), T);
  EXPECT_EQ(teichmuller(t1, *w), w->mul(T, T));
  EXPECT_EQ(w->mul(teichmuller(t, *w), teichmuller(t1, *w)), teichmuller(field->mul(t, t1), *w));
  EXPECT_EQ(field->mul(t, t1), field->one());
}

TEST(Teichmuller, OrderDividesUnitGroupOrderExactly) {
  // Independent check: w(x) has the same multiplicative order as x.
  const auto field = residue_field(P(3, "t^3 - t + 1"));
  const auto w = witt_ring(field, 8);
  for (std::uint32_t code = 1; code < field->size(); ++code) {
    const ResidueElem x{code};
    std::uint64_t ord_x = 1;
    for (ResidueElem y = x; !(y == field->one()); y = field->mul(y, x)) ++ord_x;
    const WittElem wx = teichmuller(x, *w);
    std::uint64_t ord_w = 1;
    for (WittElem y = wx; !(y == w->one()); y = w->mul(y, wx)) ASSERT_LE(++ord_w, field->size());
    ASSERT_EQ(ord_x, ord_w) << code;
  }
}

TEST(Valuation, Examples) {
  const auto w = witt_ring(P(3, "t"), 3);
  EXPECT_EQ(valuation(w->one(), *w), 0U);
  EXPECT_EQ(valuation(w->from_int(3), *w), 1U);
  EXPECT_EQ(valuation(w->from_int(18), *w), 2U);
  EXPECT_EQ(valuation(w->zero(), *w), 3U);
  EXPECT_EQ(valuation(w->from_int(27), *w), 3U);
}

TEST(Valuation, InverseIntegerIsExact) {
  const auto w = witt_ring(P(5, "t^2 + 2"), 6);
  for (std::uint64_t n : {1U, 2U, 3U, 4U, 6U, 24U}) {
    const WittElem x = w->scale(w->from_int(static_cast<std::int64_t>(n)), w->inverse_integer(n));
    EXPECT_EQ(x, w->one()) << n;
  }
  EXPECT_THROW(w->inverse_integer(5), std::domain_error);
}

TEST(WittLaws, RingAxioms) {
  Rng rng(kSeed + 1);
  expect_law(carlitz::testing::law_witt_ring_axioms(rng, kCases));
}

TEST(WittLaws, Teichmuller) {
  Rng rng(kSeed + 2);
  expect_law(carlitz::testing::law_teichmuller(rng, kCases));
}

TEST(WittLaws, CharacterOrthogonality) {
  Rng rng(kSeed + 3);
  expect_law(carlitz::testing::law_character_orthogonality(rng, kCases));
}

TEST(WittLaws, ValuationAdditive) {
  Rng rng(kSeed + 4);
  expect_law(carlitz::testing::law_valuation_additive(rng, kCases));
}
