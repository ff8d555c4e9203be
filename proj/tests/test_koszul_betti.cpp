#include <gtest/gtest.h>

#include <random>

#include "koszul/betti.hpp"
#include "koszul/error.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/parser.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

MonomialIdeal parse(const char* text) { return parse_ideal(text).evaluate(); }

std::vector<oracle::Exps> gens_of(const MonomialIdeal& I) {
  std::vector<oracle::Exps> out;
  for (const auto& g : I.gens()) out.emplace_back(g.exps().begin(), g.exps().end());
  return out;
}

std::map<std::pair<int, int>, std::size_t> as_map(const BettiTable& t) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [k, d] : t.entries()) out[{static_cast<int>(k.first), static_cast<int>(k.second)}] = d;
  return out;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, int count, int max_degree) {
  std::vector<Monomial> g;
  for (int k = 0; k < count; ++k) {
    std::vector<Exponent> e(n, 0);
    const int d = 1 + static_cast<int>(rng() % max_degree);
    for (int j = 0; j < d; ++j) ++e[rng() % n];
    g.emplace_back(e);
  }
  return MonomialIdeal(n, g);
}

// Stanley-Reisner ideal of the six-vertex real projective plane: the ten
// triangles that are not faces.
MonomialIdeal projective_plane() {
  const std::vector<std::array<int, 3>> faces = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                 {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::vector<Monomial> gens;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) {
        if (std::find(faces.begin(), faces.end(), std::array<int, 3>{a, b, c}) != faces.end()) continue;
        Monomial u(6);
        u.set_exponent(a, 1);
        u.set_exponent(b, 1);
        u.set_exponent(c, 1);
        gens.push_back(u);
      }
    }
  }
  return MonomialIdeal(6, gens);
}

}  // namespace

TEST(Koszul, BoundaryOfABasisElement) {
  const KoszulComplex K(MonomialIdeal::zero(3), FieldSpec::rationals());
  const auto d = K.boundary(K.element(Monomial(3), IndexSubset{1, 2, 3}));
  EXPECT_EQ(d.coefficient(Monomial({1, 0, 0}), IndexSubset{2, 3}), Scalar(1));
  EXPECT_EQ(d.coefficient(Monomial({0, 1, 0}), IndexSubset{1, 3}), Scalar(-1));
  EXPECT_EQ(d.coefficient(Monomial({0, 0, 1}), IndexSubset{1, 2}), Scalar(1));
}

TEST(Koszul, BoundaryOfBoundaryVanishes) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_ideal(rng, 4, 1 + rng() % 4, 3);
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
      const KoszulComplex K(I, f);
      std::vector<KoszulTerm> terms;
      const std::size_t deg = 2 + rng() % 3;
      for (int t = 0; t < 4; ++t) {
        std::vector<Exponent> e(4);
        for (auto& x : e) x = rng() % 3;
        std::uint64_t mask = 0;
        while (IndexSubset(mask).size() != deg) mask = rng() % 16;
        terms.push_back({Scalar(static_cast<int>(rng() % 5) - 2), Monomial(e), IndexSubset(mask)});
      }
      const auto z = K.chain(deg, terms);
      EXPECT_TRUE(K.boundary(K.boundary(z)).is_zero());
      EXPECT_TRUE(K.is_cycle(K.boundary(z)));
    }
  }
}

TEST(Koszul, TermsInTheIdealVanish) {
  const KoszulComplex K(parse("n=2; (x1^2)"), FieldSpec::rationals());
  EXPECT_TRUE(K.element(Monomial({2, 1}), IndexSubset{1}).is_zero());
  EXPECT_THROW(K.chain(1, {{1, Monomial({1, 0}), IndexSubset{1, 2}}}), std::invalid_argument);
  EXPECT_THROW(K.chain(1, {{1, Monomial({1, 0, 0}), IndexSubset{1}}}), DimensionMismatch);
}

TEST(Koszul, MonomialCycleTestAgreesWithBoundary) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, 3, 1 + rng() % 4, 3);
    const KoszulComplex K(I, FieldSpec::rationals());
    for (int k = 0; k < 20; ++k) {
      std::vector<Exponent> e(3);
      for (auto& x : e) x = rng() % 3;
      const IndexSubset s(1 + rng() % 7);
      const Monomial u(e);
      if (I.contains(u)) continue;
      EXPECT_EQ(K.is_monomial_cycle(u, s), K.is_cycle(K.element(u, s)));
    }
  }
}

TEST(Koszul, WedgeAndMultiply) {
  const KoszulComplex K(MonomialIdeal::zero(3), FieldSpec::rationals());
  const auto z = K.element(Monomial({1, 0, 0}), IndexSubset{2, 3});
  const auto w = K.wedge(z, 1);
  EXPECT_EQ(w.coefficient(Monomial({1, 0, 0}), IndexSubset{1, 2, 3}), Scalar(1));
  EXPECT_TRUE(K.wedge(z, 2).is_zero());
  EXPECT_EQ(K.multiply(z, Monomial({0, 1, 0})).leading().u, Monomial({1, 1, 0}));
}

TEST(Strand, HomologyDimensionsMatchTheDenseOracle) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = random_ideal(rng, 3, 1 + rng() % 4, 3);
    for (std::uint64_t p : {0u, 2u}) {
      const auto f = p ? FieldSpec::prime(p) : FieldSpec::rationals();
      EXPECT_EQ(as_map(betti_table(I, f)), oracle::betti(gens_of(I), 3, p)) << I;
    }
  }
}

TEST(Strand, ClassesAndPreimages) {
  const auto I = parse("n=2; (x1^2, x2^2)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const Strand st(K, 1, Monomial({2, 0}));
  EXPECT_EQ(st.betti(), 1u);
  const auto z = K.element(Monomial({1, 0}), IndexSubset{1});
  EXPECT_TRUE(K.is_cycle(z));
  EXPECT_FALSE(st.in_boundary(z));
  EXPECT_EQ(st.class_rank({z, z.scaled(2)}), 1u);
  // x1 x2 e1 is a cycle in degree (2, 1) that bounds.
  const Strand top(K, 1, Monomial({2, 1}));
  EXPECT_EQ(top.betti(), 0u);
  const auto b = K.boundary(K.element(Monomial({1, 0}), IndexSubset{1, 2}));
  EXPECT_FALSE(b.is_zero());
  ASSERT_TRUE(top.in_boundary(b));
  const auto pre = top.boundary_preimage(b);
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(K.boundary(*pre), b);
}

TEST(Betti, KnownTables) {
  // Complete intersection x1^2, x2^3: Koszul resolution.
  const auto ci = betti_table(parse("n=2; (x1^2, x2^3)"), FieldSpec::rationals());
  EXPECT_EQ(ci.get(0, 0), 1u);
  EXPECT_EQ(ci.get(1, 2), 1u);
  EXPECT_EQ(ci.get(1, 3), 1u);
  EXPECT_EQ(ci.get(2, 5), 1u);
  EXPECT_EQ(ci.regularity(), 3);
  // m^d has a linear resolution with reg(S/I) = d - 1.
  const auto m3 = betti_table(power(MonomialIdeal::maximal(3), 3), FieldSpec::rationals());
  EXPECT_EQ(m3.regularity(), 2);
  EXPECT_EQ(m3.get(1, 3), 10u);
  EXPECT_EQ(m3.get(2, 4), 15u);
  EXPECT_EQ(m3.get(3, 5), 6u);
  EXPECT_EQ(m3.projective_dimension(), 3u);
}

TEST(Betti, BruteForceAgrees) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = random_ideal(rng, 4, 1 + rng() % 5, 3);
    EXPECT_EQ(betti_table(I, FieldSpec::rationals()), betti_table(I, FieldSpec::rationals(), true));
  }
}

TEST(Betti, ProjectivePlaneDependsOnTheCharacteristic) {
  const auto I = projective_plane();
  const auto q = betti_table(I, FieldSpec::rationals());
  const auto g2 = betti_table(I, FieldSpec::prime(2));
  const auto g3 = betti_table(I, FieldSpec::prime(3));
  EXPECT_EQ(q, g3);
  EXPECT_FALSE(q == g2);
  EXPECT_EQ(g2.get(3, 6), 1u);
  EXPECT_EQ(g2.get(4, 6), 1u);
  EXPECT_EQ(q.get(3, 6), 0u);
}

TEST(Betti, ClosedFormForStronglyStableIdeals) {
  for (const char* text : {"n=3; (x1^2, x1*x2, x2^2, x1*x3)", "n=3; (x1, x2^2, x2*x3^3)",
                           "n=4; (x1^2, x1*x2, x1*x3, x2^3)"}) {
    const auto I = parse(text);
    ASSERT_TRUE(is_strongly_stable(I));
    EXPECT_EQ(ek_betti_stable(I), betti_table(I, FieldSpec::rationals())) << text;
  }
  EXPECT_THROW(ek_betti_stable(parse("n=2; (x2)")), InapplicableError);
}

TEST(Betti, CornersOfATable) {
  const auto t = betti_table(parse("n=2; (x1^2, x2^3)"), FieldSpec::rationals());
  const auto c = t.corners();
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Corner{2, 3, 1}));
  EXPECT_EQ(binomial(5, 2), 10u);
}

TEST(Betti, CandidateMultidegreesAreLcms) {
  const auto I = parse("n=3; (x1*x2, x2*x3, x1*x3)");
  const auto c2 = candidate_multidegrees(I, 2);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0], Monomial({1, 1, 1}));
  EXPECT_EQ(multidegree_betti(I, Monomial({1, 1, 1}), FieldSpec::rationals())[2], 2u);
}
