#include <gtest/gtest.h>

#include <random>

#include "koszul/betti.hpp"
#include "koszul/cycles.hpp"
#include "koszul/error.hpp"
#include "koszul/h3_reduction.hpp"
#include "koszul/parser.hpp"
#include "koszul/pborel.hpp"

using namespace koszul;

namespace {

MonomialIdeal parse(const char* text) { return parse_ideal(text).evaluate(); }

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

// Random combination of the cycle basis of a strand.
KoszulChain random_cycle(std::mt19937& rng, const Strand& st, const KoszulComplex& K) {
  auto z = K.zero(st.degree());
  for (const auto& c : st.cycle_basis()) z = z + c.scaled(Scalar(static_cast<int>(rng() % 5) - 2));
  return z;
}

}  // namespace

TEST(Cycles, CertificateChecksTheIdentity) {
  const auto I = parse("n=2; (x1^2, x2^2)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto w = K.element(Monomial({1, 0}), IndexSubset{1, 2});
  const auto z = K.element(Monomial({1, 1}), IndexSubset{1});
  const auto c = certify(K, z + K.boundary(w), z, w);
  EXPECT_TRUE(check_certificate(K, c));
  EXPECT_THROW(certify(K, z, z, w), VerificationFailure);
}

TEST(Cycles, NormalizationKeepsTheClass) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_ideal(rng, 4, 2 + rng() % 4, 3);
    const KoszulComplex K(I, FieldSpec::rationals());
    for (const auto& a : candidate_multidegrees(I, 2)) {
      const Strand st(K, 2, a);
      if (st.cycle_dimension() == 0) continue;
      const auto z = random_cycle(rng, st, K);
      if (z.is_zero()) continue;
      const auto nz = normalize_cycle(K, z);
      EXPECT_TRUE(is_normalized(nz.cycle));
      EXPECT_EQ(z - K.boundary(nz.witness), nz.cycle);
      EXPECT_TRUE(K.is_cycle(nz.cycle));
    }
  }
}

TEST(Cycles, NeighbourlessTermsAreMonomialCycles) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_ideal(rng, 4, 2 + rng() % 4, 3);
    const KoszulComplex K(I, FieldSpec::rationals());
    for (const auto& a : candidate_multidegrees(I, 2)) {
      const Strand st(K, 2, a);
      if (st.cycle_dimension() == 0) continue;
      const auto z = random_cycle(rng, st, K);
      for (std::size_t j = 0; j < z.length(); ++j) {
        if (has_neighbour(K, z, j)) continue;
        EXPECT_TRUE(K.is_monomial_cycle(z.terms()[j].u, z.terms()[j].sigma)) << z;
      }
    }
  }
  const KoszulComplex K(parse("n=2; (x1)"), FieldSpec::rationals());
  const auto single = K.element(Monomial({0, 0}), IndexSubset{1});
  EXPECT_FALSE(has_neighbour(K, single, 0));
  EXPECT_TRUE(K.is_monomial_cycle(Monomial({0, 0}), IndexSubset{1}));
}

TEST(Cycles, TwoCyclesDecomposeIntoMonomialCycles) {
  std::mt19937 rng(43);
  std::size_t decomposed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto I = random_ideal(rng, 5, 2 + rng() % 4, 3);
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
      const KoszulComplex K(I, f);
      for (const auto& a : candidate_multidegrees(I, 2)) {
        const Strand st(K, 2, a);
        if (st.cycle_dimension() == 0) continue;
        const auto z = random_cycle(rng, st, K);
        const auto d = decompose_h2_monomial(K, z);
        auto sum = K.zero(2);
        for (const auto& m : d.monomial_cycles) {
          EXPECT_EQ(m.length(), 1u);
          EXPECT_TRUE(K.is_cycle(m));
          sum = sum + m;
        }
        EXPECT_EQ(z - K.boundary(d.witness), sum);
        ++decomposed;
      }
    }
  }
  EXPECT_GT(decomposed, 50u);
}

TEST(Cycles, DecompositionRejectsNonCycles) {
  const KoszulComplex K(parse("n=3; (x1^2)"), FieldSpec::rationals());
  EXPECT_THROW(decompose_h2_monomial(K, K.element(Monomial({0, 0, 0}), IndexSubset{1, 2})), InapplicableError);
  EXPECT_THROW(decompose_h2_monomial(K, K.element(Monomial({0, 0, 0}), IndexSubset{1})), std::invalid_argument);
}

TEST(Cycles, TopDegreeCyclesShortenToHalfTheVariables) {
  std::mt19937 rng(44);
  std::size_t reduced = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 4 + rng() % 2;
    const auto I = random_ideal(rng, n, 2 + rng() % 5, 4);
    const KoszulComplex K(I, FieldSpec::rationals());
    for (const auto& a : candidate_multidegrees(I, n - 1)) {
      const Strand st(K, n - 1, a);
      for (const auto& z : st.homology_representatives()) {
        for (const auto& comp : top_degree_components(K, a)) {
          const auto part = restrict_to_component(K, z, comp);
          if (part.is_zero() || !K.is_cycle(part)) continue;
          try {
            const auto r = reduce_top_degree(K, part);
            EXPECT_LE(r.reduced.length(), n / 2);
            EXPECT_EQ(part - K.boundary(r.witness), r.reduced);
            ++reduced;
          } catch (const InapplicableError&) {
          }
        }
      }
    }
  }
  EXPECT_GT(reduced, 0u);
}

TEST(Cycles, TopDegreeBoundaryReducesToZero) {
  const auto I = parse("n=4; (x1,x2)*(x1,x2,x3,x4)[2]");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = K.chain(3, {{1, Monomial({1, 0, 1, 1}), IndexSubset{1, 2, 4}},
                             {-1, Monomial({1, 1, 0, 1}), IndexSubset{1, 3, 4}},
                             {1, Monomial({2, 0, 0, 1}), IndexSubset{2, 3, 4}}});
  ASSERT_TRUE(K.is_cycle(z));
  EXPECT_TRUE(reduce_top_degree(K, z).reduced.is_zero());
}

TEST(H3Reduction, ExampleCyclesUseTheExpectedMoves) {
  const auto bi = parse("n=4; (x1,x2)*(x1,x2,x3,x4)[2]");
  const KoszulComplex K(bi, FieldSpec::rationals());
  const auto z = K.chain(3, {{1, Monomial({0, 1, 1, 1}), IndexSubset{1, 3, 4}},
                             {-1, Monomial({1, 0, 1, 1}), IndexSubset{2, 3, 4}}});
  const auto r = reduce_h3_principal_pborel(K, 2, z);
  ASSERT_FALSE(r.steps.empty());
  EXPECT_EQ(r.steps.front().rule, "binomial");
  EXPECT_TRUE(check_certificate(K, r.certificate));

  const auto inter = parse("n=4; pborel(x3*x4^2; 2)");
  const KoszulComplex Ki(inter, FieldSpec::rationals());
  const auto zi = Ki.chain(3, {{1, Monomial({1, 0, 1, 1}), IndexSubset{1, 2, 4}},
                               {-1, Monomial({1, 1, 0, 1}), IndexSubset{1, 3, 4}}});
  const auto ri = reduce_h3_principal_pborel(Ki, 2, zi);
  ASSERT_EQ(ri.companions.size(), 1u);
  EXPECT_EQ(ri.companions[0].leading().u, Monomial({2, 0, 0, 1}));
  EXPECT_EQ(ri.companions[0].leading().sigma, (IndexSubset{2, 3, 4}));
}

TEST(H3Reduction, CompanionsSpanH3OfRandomPrincipalIdeals) {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4;
    std::vector<Exponent> e(n, 0);
    for (int d = 0; d < 5; ++d) ++e[rng() % n];
    const std::uint64_t p = trial % 2 ? 3 : 2;
    const auto I = principal_p_borel(Monomial(e), p).expand();
    const KoszulComplex K(I, FieldSpec::rationals());
    for (const auto& a : candidate_multidegrees(I, 3)) {
      const Strand st(K, 3, a);
      if (st.betti() == 0) continue;
      std::vector<KoszulChain> comps;
      for (const auto& z : st.homology_representatives()) {
        const auto r = reduce_h3_principal_pborel(K, static_cast<std::uint32_t>(p), z);
        EXPECT_TRUE(check_certificate(K, r.certificate));
        for (const auto& c : r.companions) {
          EXPECT_LE(c.length(), 2u);
          comps.push_back(c);
        }
      }
      EXPECT_EQ(st.class_rank(comps), st.betti());
    }
  }
}

TEST(H3Reduction, RejectsOtherIdeals) {
  const KoszulComplex K(parse("n=4; (x1*x4, x2*x3)"), FieldSpec::rationals());
  const auto z = K.element(Monomial({0, 0, 0, 0}), IndexSubset{1, 2, 3});
  EXPECT_THROW(reduce_h3_principal_pborel(K, 2, z), InapplicableError);
}
