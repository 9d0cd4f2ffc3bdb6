#include <gtest/gtest.h>

#include <set>

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

}  // namespace

TEST(FqMake, PrimeFieldHasModulusX) {
  const auto f = fq_make(2, 1);
  EXPECT_TRUE(f->is_prime_field());
  EXPECT_EQ(f->q(), 2U);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FqMake, F4GeneratorSatisfiesItsModulus) {
  const auto f = fq_make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const FqElem a = f->generator();
  EXPECT_EQ(f->mul(a, a), f->add(a, f->one()));
  EXPECT_EQ(render_modulus(*f), "x^2 + x + 1");
}

TEST(FqMake, AcceptsXSquaredPlusOneOverF3) {
  // x^2 + 1 has no root in F_3: 0 -> 1, 1 -> 2, 2 -> 2.
  for (std::int64_t x = 0; x < 3; ++x) EXPECT_NE((x * x + 1) % 3, 0);
  const auto f = fq_make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  EXPECT_EQ(f->q(), 9U);
  const FqElem a = f->generator();
  EXPECT_EQ(f->mul(a, a), f->from_int(-1));
}

TEST(FqMake, DefaultModuliAreIrreducibleUpTo16) {
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 11U, 13U, 16U}) {
    const auto [p, r] = split_prime_power(q);
    const auto f = fq_make(p, r);
    EXPECT_EQ(f->q(), q);
    if (r > 1) {
      std::vector<std::int64_t> m(f->modulus().begin(), f->modulus().end());
      EXPECT_TRUE(is_irreducible(poly_from_ints(carlitz::detail::prime_field(p), m))) << q;
    }
  }
}

TEST(FqMake, Rejections) {
  EXPECT_THROW(fq_make(4, 1), std::invalid_argument);
  EXPECT_THROW(fq_make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(fq_make(3, 2, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
  EXPECT_THROW(fq_make(2, 17), std::invalid_argument);
  EXPECT_THROW(split_prime_power(12), std::invalid_argument);
  EXPECT_THROW(split_prime_power(1), std::invalid_argument);
}

TEST(FqMake, SplitPrimePower) {
  EXPECT_EQ(split_prime_power(16), (std::pair<std::uint32_t, unsigned>{2, 4}));
  EXPECT_EQ(split_prime_power(25), (std::pair<std::uint32_t, unsigned>{5, 2}));
  EXPECT_EQ(split_prime_power(7), (std::pair<std::uint32_t, unsigned>{7, 1}));
}

TEST(Fq, MultiplicationMatchesSchoolbookReduction) {
  // Independent product: multiply coordinate vectors and reduce by the modulus.
  for (unsigned q : {4U, 8U, 9U, 16U, 25U}) {
    const auto [p, r] = split_prime_power(q);
    const auto f = fq_make(p, r);
    const auto& m = f->modulus();
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        const auto a = f->coordinates(FqElem{x}), b = f->coordinates(FqElem{y});
        std::vector<std::uint64_t> prod(2 * r, 0);
        for (unsigned i = 0; i < r; ++i)
          for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (unsigned k = 2 * r - 1; k >= r; --k) {
          const std::uint64_t c = prod[k];
          prod[k] = 0;
          for (unsigned i = 0; i < r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - m[i]) * c) % p;
        }
        std::vector<std::uint32_t> expect(prod.begin(), prod.begin() + r);
        ASSERT_EQ(f->coordinates(f->mul(FqElem{x}, FqElem{y})), expect) << q << " " << x << " " << y;
      }
    }
  }
}

TEST(Fq, UnitGroupIsCyclicOfOrderQMinus1) {
  for (unsigned q : {2U, 3U, 4U, 5U, 8U, 9U, 16U}) {
    const auto [p, r] = split_prime_power(q);
    const auto f = fq_make(p, r);
    const FqElem g = f->primitive_element();
    std::set<std::uint32_t> seen;
    FqElem x = f->one();
    for (unsigned i = 0; i + 1 < q; ++i, x = f->mul(x, g)) seen.insert(x.code);
    EXPECT_EQ(seen.size(), q - 1) << q;
    EXPECT_EQ(x, f->one());
  }
}

TEST(Fq, RenderUsesGeneratorPowers) {
  const auto f = fq_make(2, 2);
  const FqElem a = f->generator();
  EXPECT_EQ(render_fq(*f, a), "a");
  EXPECT_EQ(render_fq(*f, f->mul(a, a)), "a^2");
  EXPECT_EQ(render_fq(*f, f->one()), "1");
  EXPECT_EQ(render_fq(*f, f->zero()), "0");
}

TEST(ResidueField, UnitGroupOrderAndReduction) {
  const auto f = fq_make(2, 1);
  const auto field = residue_field(parse_poly(f, "t^2 + t + 1"));
  EXPECT_EQ(field->size(), 4U);
  const ResidueElem t = field->t_bar();
  EXPECT_EQ(field->mul(t, field->add(t, field->one())), field->one());
  EXPECT_EQ(field->pow(field->primitive_element(), 3), field->one());
}

TEST(FieldLaws, FqRingAxioms) {
  Rng rng(kSeed);
  expect_law(carlitz::testing::law_fq_ring_axioms(rng, kCases));
}

TEST(FieldLaws, ResidueRingAxioms) {
  Rng rng(kSeed + 1);
  expect_law(carlitz::testing::law_residue_ring_axioms(rng, kCases));
}

TEST(FieldLaws, FrobeniusAdditive) {
  Rng rng(kSeed + 2);
  expect_law(carlitz::testing::law_frobenius(rng, kCases));
}
