#include <gtest/gtest.h>

#include <random>

#include "koszul/ideal.hpp"
#include "koszul/parser.hpp"
#include "koszul/pborel.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

MonomialIdeal parse(const char* text) { return parse_ideal(text).evaluate(); }

Monomial random_mono(std::mt19937& rng, std::size_t n, int degree) {
  std::vector<Exponent> e(n, 0);
  for (int d = 0; d < degree; ++d) ++e[rng() % n];
  return Monomial(e);
}

}  // namespace

TEST(PBorel, PrincipalIdealEqualsExchangeClosure) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng() % 3];
    const auto u = random_mono(rng, n, 1 + rng() % 6);
    const auto I = principal_p_borel(u, p).expand();
    const auto closure = oracle::pborel_closure(oracle::Exps(u.exps().begin(), u.exps().end()), p);
    std::set<oracle::Exps> gens;
    for (const auto& g : I.gens()) gens.insert(oracle::Exps(g.exps().begin(), g.exps().end()));
    EXPECT_EQ(gens, closure) << u << " p=" << p;
    EXPECT_TRUE(I.contains(u));
    EXPECT_TRUE(is_p_borel(I, p));
    EXPECT_TRUE(is_borel_type(I));
    EXPECT_EQ(principal_generator(I, p), u);
  }
}

TEST(PBorel, PrincipalGeneratorRejectsSums) {
  const auto I = sum(principal_p_borel(Monomial({0, 2}), 2).expand(),
                     principal_p_borel(Monomial({1, 0}), 2).expand());
  EXPECT_FALSE(principal_generator(I, 2).has_value());
}

TEST(PBorel, SplitFactorizationMultipliesBack) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 2;
    const auto u = random_mono(rng, n, 2 + rng() % 5);
    const auto F = principal_p_borel(u, 2);
    for (std::size_t a = 1; a < n; ++a) {
      const auto [low, high] = split_factorization(F, a);
      EXPECT_EQ(product(low, high), F.expand());
      const auto [ul, uh] = split_monomial(u, a);
      EXPECT_EQ(ul * uh, u);
      EXPECT_LE(ul.max_index().value_or(0), a);
    }
  }
}

TEST(PBorel, ExampleFactorizations) {
  // pborel(x3^3; 2) is m m^[2] in three variables.
  EXPECT_EQ(principal_p_borel(Monomial({0, 0, 3}), 2).expand(), parse("n=3; (x1,x2,x3)*(x1,x2,x3)[2]"));
  // pborel(x2 x4^2; 2) is (x1,x2)(x1..x4)^[2].
  EXPECT_EQ(principal_p_borel(Monomial({0, 1, 0, 2}), 2).expand(), parse("n=4; (x1,x2)*(x1,x2,x3,x4)[2]"));
  const auto F = principal_p_borel(Monomial({0, 0, 3}), 2);
  EXPECT_TRUE(F.only_full_factors());
  EXPECT_EQ(F.alpha(3, 0), 1u);
  EXPECT_EQ(F.alpha(3, 1), 1u);
}

TEST(PBorel, CasNormalForm) {
  const auto a = lemma_cas_normalize({4}, 2);
  EXPECT_EQ(a.layers, (std::vector<CasLayer>{{0, 2}, {1, 1}}));
  EXPECT_TRUE(a.bound_violated);
  EXPECT_EQ(expand_layers(2, 2, a.layers), power(MonomialIdeal::maximal(2), 4));
  EXPECT_EQ(lemma_cas_normalize({1}, 2).layers, (std::vector<CasLayer>{{0, 1}}));
  EXPECT_EQ(lemma_cas_normalize({0, 1}, 2).layers, (std::vector<CasLayer>{{1, 1}}));
  EXPECT_FALSE(lemma_cas_normalize({1}, 2).bound_violated);
}

TEST(PBorel, NormalFormPreservesTheIdeal) {
  for (std::uint64_t p : {2u, 3u}) {
    for (Exponent a0 = 0; a0 < 7; ++a0) {
      for (Exponent a1 = 0; a1 < 3; ++a1) {
        const std::vector<Exponent> alpha = {a0, a1};
        std::vector<CasLayer> raw;
        if (a0) raw.push_back({0, a0});
        if (a1) raw.push_back({1, a1});
        const auto nf = lemma_cas_normalize(alpha, p);
        EXPECT_EQ(expand_layers(2, p, nf.layers), expand_layers(2, p, raw)) << a0 << "," << a1;
      }
    }
  }
}

TEST(PBorel, FrobeniusProductRegression) {
  // m^3 m^[3] in three variables: all sextics except x1^2 x2^2 x3^2.
  const auto m = MonomialIdeal::maximal(3);
  const auto T = product(power(m, 3), frobenius_power(m, 3));
  std::vector<Monomial> expected;
  for (const auto& u : monomials_of_degree(3, 6)) {
    if (!(u == Monomial({2, 2, 2}))) expected.push_back(u);
  }
  EXPECT_EQ(T, MonomialIdeal(3, expected));
}

TEST(PBorel, BorelChainOfAStronglyStableIdeal) {
  const auto I = parse("n=3; (x1^2, x1*x2, x2^2, x1*x3)");
  const auto chain = borel_chain(I);
  ASSERT_FALSE(chain.stages.empty());
  EXPECT_EQ(chain.stages.front().index, 3u);
  const auto cand = extremal_via_chain(I);
  EXPECT_FALSE(cand.empty());
}
