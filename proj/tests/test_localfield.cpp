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

LocalSeries series(const ResidueFieldPtr& f, std::size_t order, std::vector<std::int64_t> ints) {
  std::vector<ResidueElem> c;
  for (auto v : ints) c.push_back(f->from_int(v));
  return LocalSeries(f, order, std::move(c));
}

}  // namespace

TEST(LocalModel, DegreeOneExamples) {
  const LocalModel m2(P(2, "t"));
  EXPECT_EQ(m2.order(), 2U);
  EXPECT_EQ(m2.t_series(), m2.lambda());

  const LocalModel m3(P(3, "t"));
  EXPECT_EQ(m3.t_series(), series(m3.residue_field(), 3, {0, 0, 2}));
}

TEST(LocalModel, TorsionRelationAtT2PlusTPlus1) {
  const Poly f = P(2, "t^2 + t + 1");
  const LocalModel m(f);
  ASSERT_EQ(m.order(), 4U);
  const auto t = m.t_series();
  EXPECT_EQ(t.coeff(0), m.residue_field()->t_bar());
  // Phi(X) = X^3 + f X + f at X = lambda, with f(t) expanded by hand.
  const auto one = LocalSeries::one(m.residue_field(), 4);
  const auto ft = t * t + t + one;
  const auto x = m.lambda();
  EXPECT_TRUE((x * x * x + ft * x + ft).is_zero());
  EXPECT_TRUE(m.eisenstein_residual().is_zero());
}

TEST(LocalModel, GaloisImageExamples) {
  const LocalModel m(P(3, "t^2 + 1"));
  EXPECT_EQ(m.galois_image(m.residue_field()->one()), m.lambda());
  EXPECT_THROW(m.galois_image(m.residue_field()->zero()), std::domain_error);

  const LocalModel d1(P(5, "t + 2"));
  for (std::uint32_t c = 1; c < 5; ++c) {
    const ResidueElem g{c};
    EXPECT_EQ(d1.galois_image(g), d1.lambda().scale(g));
  }
}

TEST(LocalModel, UnitRatiosHaveCharacterResidue) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(81)) {
    const LocalModel m(prime);
    const CharacterContext ctx(m.residue_field(), 2);
    for (const auto g : ctx.group())
      ASSERT_EQ(m.unit_ratio(g).coeff(0), g) << render_poly(prime);
  }
}

TEST(Dlog, Examples) {
  const auto field = residue_field(P(2, "t"));
  EXPECT_TRUE(dlog(LocalSeries::one(field, 4)).is_zero());
  EXPECT_EQ(dlog(series(field, 4, {1, 1})).u, series(field, 4, {1, 1, 1, 1}));
  EXPECT_THROW(dlog(series(field, 4, {0, 1})), std::domain_error);
  // p does not divide N: the result is known to order N - 1.
  const auto f3 = residue_field(P(3, "t"));
  EXPECT_EQ(dlog(series(f3, 4, {1, 1})).u.order(), 3U);
}

TEST(EigenUniformizer, Examples) {
  const LocalModel d1(P(3, "t + 1"));
  EXPECT_EQ(eigen_uniformizer(d1).pi, d1.lambda());

  for (const auto& prime : carlitz::testing::oracle_range_primes(64)) {
    const LocalModel m(prime);
    const auto pi = eigen_uniformizer(m);
    ASSERT_EQ(pi.pi.truncated(2), m.lambda().truncated(2)) << render_poly(prime);
    ASSERT_EQ(pi.derivative.coeff(0), m.residue_field()->one());
  }
}

TEST(DlogComponent, Examples) {
  EXPECT_TRUE(dlog_lambda_component(LocalModel(P(2, "t^4 + t + 1")), 9).is_zero());
  EXPECT_FALSE(dlog_lambda_component(LocalModel(P(2, "t^2 + t + 1")), 2).is_zero());

  const LocalModel m(P(3, "t^2 + 1"));
  const LocalDlogTable table(m);
  for (unsigned n = 3; n < 8; n += 2) EXPECT_TRUE(table.component(n).is_zero()) << n;
  EXPECT_THROW(table.component(0), std::out_of_range);
  EXPECT_THROW(table.component(8), std::out_of_range);
}

TEST(BcFromLocal, Examples) {
  const LocalModel m(P(2, "t^2 + t + 1"));
  EXPECT_EQ(bc_from_local(m, 2), m.residue_field()->one());
  EXPECT_THROW(bc_from_local(m, 1), std::out_of_range);

  const LocalModel m3(P(3, "t^3 - t + 1"));
  EXPECT_TRUE(m3.residue_field()->is_zero(bc_from_local(m3, 10)));
  EXPECT_TRUE(m3.residue_field()->is_zero(bc_from_local(m3, 5)));
}

TEST(BcFromLocal, AgreesWithSeriesInversion) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(81)) {
    const LocalModel m(prime);
    const LocalDlogTable table(m);
    const auto local = LocalBernoulli(table, eigen_uniformizer(m)).all();
    const auto global = bc_numbers(m.residue_field());
    for (std::size_t n = 2; n < local.size(); ++n) ASSERT_EQ(local[n], global[n]) << render_poly(prime) << " n=" << n;
  }
}

TEST(DlogComponent, VanishesExactlyAtIrregularIndices) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(81)) {
    const LocalModel m(prime);
    const LocalDlogTable table(m);
    const auto bc = bc_numbers(m.residue_field());
    for (unsigned n = 2; n < bc.size(); ++n)
      ASSERT_EQ(table.component(n).is_zero(), bc.field->is_zero(bc[n])) << render_poly(prime) << " n=" << n;
  }
}

TEST(LocalLaws, NewtonResiduals) {
  Rng rng(kSeed);
  expect_law(carlitz::testing::law_newton_residual(rng, kCases));
}

TEST(LocalLaws, PiEigenproperty) {
  Rng rng(kSeed + 1);
  expect_law(carlitz::testing::law_pi_eigenproperty(rng, kCases));
}

TEST(LocalLaws, FunctionalEquationInModel) {
  Rng rng(kSeed + 2);
  expect_law(carlitz::testing::law_model_functional_equation(rng, kCases));
}

TEST(LocalLaws, GaloisComposition) {
  Rng rng(kSeed + 3);
  expect_law(carlitz::testing::law_galois_composition(rng, kCases));
}

TEST(LocalLaws, DlogLogarithmLaw) {
  Rng rng(kSeed + 4);
  expect_law(carlitz::testing::law_dlog(rng, kCases));
}
