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

/**
 * Oracle for prime q: W = (Z/p^k)[t] / (naive lift of the prime), with
 * elements as coefficient vectors in the basis 1, t, ..., t^{d-1}. Shares
 * no code with the library's Witt ring beyond enumerating A/p.
 */
class PolynomialWitt {
 public:
  PolynomialWitt(const Poly& prime, unsigned k) : p_(prime.ring().p()), d_(static_cast<unsigned>(prime.degree())) {
    pk_ = 1;
    for (unsigned i = 0; i < k; ++i) pk_ *= p_;
    k_ = k;
    for (const auto& c : prime.coefficients()) g_.push_back(c.code);
  }

  using Elem = std::vector<std::uint64_t>;

  Elem one() const {
    Elem e(d_, 0);
    e[0] = 1 % pk_;
    return e;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<unsigned __int128> prod(2 * d_, 0);
    for (unsigned i = 0; i < d_; ++i)
      for (unsigned j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % pk_;
    for (unsigned j = 2 * d_ - 1; j >= d_; --j) {
      const unsigned __int128 c = prod[j] % pk_;
      prod[j] = 0;
      for (unsigned i = 0; i < d_; ++i) prod[j - d_ + i] = (prod[j - d_ + i] + (pk_ - g_[i] % pk_) * c) % pk_;
    }
    Elem out(d_);
    for (unsigned i = 0; i < d_; ++i) out[i] = static_cast<std::uint64_t>(prod[i] % pk_);
    return out;
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem acc = one();
    while (e != 0) {
      if (e & 1U) acc = mul(acc, a);
      e >>= 1U;
      if (e != 0) a = mul(a, a);
    }
    return acc;
  }

  Elem teichmuller(const ResidueField& field, ResidueElem x) const {
    Elem y(d_, 0);
    const Poly rep = field.to_poly(x);
    for (std::size_t i = 0; i < rep.size(); ++i) y[i] = rep.coeff(i).code;
    for (;;) {
      Elem next = pow(y, field.size());
      if (next == y) return y;
      y = std::move(next);
    }
  }

  /// v_p of (1/(q-1)) sum_g deg(g) w(g)^{-n}; the unit 1/(q-1) does not change it.
  unsigned l_valuation(const ResidueField& field, unsigned n) {
    const std::uint64_t m = field.size() - 1;
    if (lifts_.empty())
      for (std::uint32_t code = 1; code <= m; ++code) lifts_.push_back(teichmuller(field, ResidueElem{code}));
    Elem acc(d_, 0);
    for (std::uint32_t code = 1; code <= m; ++code) {
      const auto deg = static_cast<std::uint64_t>(field.rep_degree(ResidueElem{code}));
      if (deg == 0) continue;
      const Elem term = pow(lifts_[code - 1], (m - n % m) % m);
      for (unsigned i = 0; i < d_; ++i) acc[i] = (acc[i] + deg * term[i]) % pk_;
    }
    unsigned best = k_;
    for (auto c : acc) {
      if (c == 0) continue;
      unsigned v = 0;
      for (; c % p_ == 0; c /= p_) ++v;
      best = std::min(best, v);
    }
    return best;
  }

 private:
  std::uint64_t p_;
  unsigned d_;
  unsigned k_ = 0;
  std::uint64_t pk_ = 1;
  std::vector<std::uint64_t> g_;
  std::vector<Elem> lifts_;
};

/// Lengths for every n in ns, widening k until each valuation is below it.
std::vector<unsigned> oracle_lengths(const Poly& prime, const std::vector<unsigned>& ns) {
  const auto field = residue_field(prime);
  std::vector<std::optional<unsigned>> out(ns.size());
  for (unsigned k = 12;; k *= 2) {
    PolynomialWitt w(prime, k);
    bool done = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (out[i]) continue;
      const unsigned v = w.l_valuation(*field, ns[i]);
      if (v < k)
        out[i] = v;
      else
        done = false;
    }
    if (done) break;
  }
  std::vector<unsigned> lengths;
  for (const auto& v : out) lengths.push_back(*v);
  return lengths;
}

unsigned oracle_length(const Poly& prime, unsigned n) { return oracle_lengths(prime, {n}).front(); }

}  // namespace

TEST(CharacterContext, SmallGroups) {
  const CharacterContext ctx = character_context(P(2, "t^2 + t + 1"));
  ASSERT_EQ(ctx.group().size(), 3U);
  std::vector<std::string> reps;
  std::vector<unsigned> degs;
  for (const auto g : ctx.group()) {
    reps.push_back(render_poly(ctx.residue_field()->to_poly(g)));
    degs.push_back(ctx.deg(g));
  }
  EXPECT_EQ(reps, (std::vector<std::string>{"1", "t", "t + 1"}));
  EXPECT_EQ(degs, (std::vector<unsigned>{0, 1, 1}));
  EXPECT_EQ(ctx.monic_representatives().size(), 3U);

  const CharacterContext c3 = character_context(P(3, "t"));
  EXPECT_EQ(c3.group_order(), 2U);
  for (const auto g : c3.group()) EXPECT_EQ(c3.deg(g), 0U);
}

TEST(CharacterContext, MonicRepresentativeCount) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(256)) {
    const CharacterContext ctx(residue_field(prime), 4);
    std::uint64_t expect = 0, qi = 1;
    for (int j = 0; j < prime.degree(); ++j, qi *= prime.ring().q()) expect += qi;
    ASSERT_EQ(ctx.monic_representatives().size(), expect) << render_poly(prime);
    ASSERT_EQ(ctx.group().size(), ctx.group_order());
  }
}

TEST(LCharSum, HandComputationAtT2PlusTPlus1) {
  const CharacterContext ctx = character_context(P(2, "t^2 + t + 1"));
  const auto& w = ctx.witt();
  const LReport r = l_char_sum(ctx, 1);
  ASSERT_EQ(r.numerator.size(), 2U);
  EXPECT_EQ(r.numerator.coeff(0), w.one());
  EXPECT_EQ(r.numerator.coeff(1), w.neg(w.one()));
  ASSERT_TRUE(r.quotient.has_value());
  EXPECT_EQ(r.quotient->degree(), 0);
  EXPECT_EQ(r.quotient->coeff(0), w.one());
  // Closed formula: T^{-1} + T^{-2} = T^2 + T = -1.
  ASSERT_TRUE(r.value.has_value());
  EXPECT_EQ(*r.value, w.neg(w.one()));
  EXPECT_EQ(*r.value, w.neg(r.quotient->eval(w.one())));
  EXPECT_EQ(r.valuation, 0U);
  EXPECT_EQ(pic_eigenspace_length(ctx, 1).length, 0U);
}

TEST(LCharSum, DomainErrors) {
  const CharacterContext ctx = character_context(P(3, "t^2 + 1"));
  EXPECT_THROW(l_char_sum(ctx, 0), std::out_of_range);
  EXPECT_THROW(l_char_sum(ctx, 8), std::out_of_range);
  EXPECT_THROW(l_value_at_one(ctx, 3), std::domain_error);
  EXPECT_NO_THROW(l_char_sum(ctx, 3));
  EXPECT_FALSE(l_char_sum(ctx, 3).quotient.has_value());
  EXPECT_TRUE(l_char_sum(ctx, 4).quotient.has_value());

  const CharacterContext deg1 = character_context(P(5, "t + 1"));
  EXPECT_THROW(l_char_sum(deg1, 4), std::out_of_range);
}

TEST(LCharSum, NumeratorDegreeBelowD) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(81)) {
    const CharacterContext ctx(residue_field(prime), 6);
    for (unsigned n = 1; n + 1 < ctx.residue_field()->size(); ++n)
      ASSERT_LT(l_numerator(ctx, n).degree(), prime.degree()) << render_poly(prime) << " n=" << n;
  }
}

TEST(PicLength, TablePrimes) {
  EXPECT_EQ(pic_eigenspace_length(character_context(P(2, "t^4 + t + 1")), 9).length, 0U);
  EXPECT_EQ(pic_eigenspace_length(character_context(P(3, "t^3 - t + 1")), 10).length, 0U);
  EXPECT_EQ(pic_eigenspace_length(character_context(P(3, "t^3 - t - 1")), 10).length, 0U);
}

TEST(PicLength, PositiveLengthsAgreeWithPolynomialOracle) {
  const std::vector<std::tuple<unsigned, const char*, unsigned>> cases{
      {2, "t^4 + t + 1", 5}, {2, "t^4 + t + 1", 10}, {3, "t^3 - t + 1", 2}, {3, "t^4 + t^2 - 1", 40}};
  for (const auto& [q, text, n] : cases) {
    const Poly prime = P(q, text);
    const unsigned got = pic_eigenspace_length(character_context(prime), n).length;
    EXPECT_EQ(got, oracle_length(prime, n)) << text << " n=" << n;
    EXPECT_GT(got, 0U) << text << " n=" << n;
  }
}

TEST(PicLength, AllLengthsAgreeWithPolynomialOracleForPrimeQ) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(256)) {
    const unsigned q = prime.ring().q();
    if (!prime.ring().is_prime_field()) continue;
    const CharacterContext ctx(residue_field(prime));
    std::vector<unsigned> ns;
    for (unsigned n = q - 1; n + 1 < ctx.residue_field()->size(); n += q - 1) ns.push_back(n);
    const auto expected = oracle_lengths(prime, ns);
    for (std::size_t i = 0; i < ns.size(); ++i)
      ASSERT_EQ(pic_eigenspace_length(ctx, ns[i]).length, expected[i]) << render_poly(prime) << " n=" << ns[i];
  }
}

TEST(PicLength, SaturationRaisesPrecision) {
  // Precision 1 cannot resolve a valuation of 3; the ladder must widen it.
  const CharacterContext ctx(residue_field(P(3, "t^3 - t + 1")), 1);
  const EigenLength r = pic_eigenspace_length(ctx, 2);
  EXPECT_EQ(r.length, 3U);
  EXPECT_GT(r.precision, 3U);
}

TEST(PicLength, IndependentOfStructuralLift) {
  for (const auto& prime : carlitz::testing::oracle_range_primes(81)) {
    const auto field = residue_field(prime);
    const CharacterContext a(field, 12, WittRing::Lift::naive);
    const CharacterContext b(field, 12, WittRing::Lift::shifted);
    const unsigned q1 = field->base()->q() - 1;
    for (unsigned n = q1; n + 1 < field->size(); n += q1)
      ASSERT_EQ(pic_eigenspace_length(a, n).length, pic_eigenspace_length(b, n).length) << render_poly(prime);
  }
}

TEST(LseriesLaws, NumeratorVanishesAndClosedForm) {
  Rng rng(kSeed);
  expect_law(carlitz::testing::law_numerator_vanishes(rng, kCases));
}

TEST(LseriesLaws, PrecisionIndependence) {
  Rng rng(kSeed + 1);
  expect_law(carlitz::testing::law_valuation_precision_independent(rng, kCases));
}
