#include <gtest/gtest.h>

#include <random>

#include "koszul/ah_basis.hpp"
#include "koszul/betti.hpp"
#include "koszul/error.hpp"
#include "koszul/lifting.hpp"
#include "koszul/min_length.hpp"
#include "koszul/parser.hpp"
#include "koszul/pborel.hpp"

using namespace koszul;

namespace {

MonomialIdeal parse(const char* text) { return parse_ideal(text).evaluate(); }

std::vector<KoszulChain> chains(const KoszulComplex& K, const std::vector<AHBasisElement>& b) {
  std::vector<KoszulChain> out;
  for (const auto& e : b) out.push_back(e.chain(K));
  return out;
}

}  // namespace

TEST(MinLength, MonomialCyclesHaveLengthOne) {
  const auto I = parse("n=3; (x1^2, x2^2, x3^2)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = K.element(Monomial({1, 1, 0}), IndexSubset{1, 2});
  const auto r = min_class_length(K, z, 4);
  EXPECT_EQ(r.status, SearchStatus::Found);
  EXPECT_EQ(r.length, 1u);
}

TEST(MinLength, FourVariableBinomialClass) {
  const auto I = parse("n=4; (x1,x2)*(x1,x2,x3,x4)[2]");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = K.chain(3, {{1, Monomial({0, 1, 1, 1}), IndexSubset{1, 3, 4}},
                             {-1, Monomial({1, 0, 1, 1}), IndexSubset{2, 3, 4}}});
  EXPECT_EQ(min_class_length(K, z, 4).length, 2u);
  const auto s = search_min_length_strand(K, 3, *z.multidegree(), 4);
  EXPECT_EQ(s.status, SearchStatus::Found);
  EXPECT_EQ(s.min_length, 2u);
  for (const auto& w : s.witnesses) EXPECT_LE(w.length(), 2u);
}

TEST(MinLength, StrandOfFiveVariablesNeedsLengthThree) {
  const auto I = parse("n=5; (x3*x4*x5, x2*x4*x5, x1*x2*x4, x1*x2*x3, x1*x3*x5)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = K.chain(3, {{1, Monomial({0, 0, 1, 1, 0}), IndexSubset{1, 2, 5}},
                             {-1, Monomial({0, 1, 0, 1, 0}), IndexSubset{1, 3, 5}},
                             {1, Monomial({1, 0, 1, 0, 0}), IndexSubset{2, 4, 5}}});
  const auto r = min_class_length(K, z, 4);
  EXPECT_EQ(r.dimension, 10u);
  EXPECT_EQ(r.length, 3u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->length(), 3u);
  // Length 2 is not enough: the search reports none up to that bound.
  EXPECT_EQ(min_class_length(K, z, 2).status, SearchStatus::NoneUpToBound);
}

TEST(MinLength, LargeStrandsReportTheBound) {
  // Every u e_sigma with u sigma = x1...x7 and |sigma| = 3 survives mod m^5.
  const auto I = power(MonomialIdeal::maximal(7), 5);
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto r = search_min_length_strand(K, 3, Monomial({1, 1, 1, 1, 1, 1, 1}), 4);
  EXPECT_GT(r.dimension, kMaxSearchDimension);
  EXPECT_EQ(r.status, SearchStatus::BoundExceeded);
  EXPECT_FALSE(r.min_length.has_value());
}

TEST(LayeredBasis, ProductOfFrobeniusPowersInThreeVariables) {
  const auto F = principal_p_borel(Monomial({0, 0, 3}), 2);
  const auto I = F.expand();
  const KoszulComplex K(I, FieldSpec::rationals());
  for (std::size_t i = 1; i <= 3; ++i) {
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
      const KoszulComplex Kf(I, f);
      const auto v = verify_basis(I, chains(Kf, ah_basis(F, i)), i, f, betti_table(I, f).total(i));
      EXPECT_TRUE(v.ok) << i << " " << f.name() << " " << v.failed_check << " " << v.detail;
    }
  }
  EXPECT_EQ(ah_basis(F, 2).size(), 12u);
  EXPECT_TRUE(ah_basis(F, 0).empty());
}

TEST(LayeredBasis, RejectsDigitsAtLeastP) {
  PBorelFactorization F(2, 2);
  F.set_alpha(2, 0, 4);
  EXPECT_THROW(ah_basis(F, 2), InapplicableError);
}

TEST(LayeredBasis, VerificationNamesTheFailingCheck) {
  const auto I = power(MonomialIdeal::maximal(2), 4);
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto good = K.element(Monomial({3, 0}), IndexSubset{1, 2});
  const auto bad = K.element(Monomial({1, 1}), IndexSubset{1, 2});
  EXPECT_EQ(verify_basis(I, {bad}, 2, FieldSpec::rationals()).failed_check, "cycle");
  EXPECT_EQ(verify_basis(I, {good, good}, 2, FieldSpec::rationals()).failed_check, "independence");
  EXPECT_EQ(verify_basis(I, {good}, 2, FieldSpec::rationals()).failed_check, "count");
}

TEST(Lifting, ShapeDetectionAndDigits) {
  const auto s = detect_shape(parse("n=3; pborel(x2*x3^2; 3)"), 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->gamma, 1u);
  EXPECT_EQ(s->alpha, 2u);
  EXPECT_FALSE(s->digit_condition());
  EXPECT_TRUE(detect_shape(parse("n=3; pborel(x2*x3; 3)"), 3)->digit_condition());
  EXPECT_FALSE(detect_shape(parse("n=3; pborel(x1*x3; 2)"), 2).has_value());
  TwoVariableShape bad{3, 2, 1, 1};
  EXPECT_FALSE(bad.digit_condition());
  EXPECT_THROW(lift_monomial_basis(bad, FieldSpec::rationals()), InapplicableError);
}

TEST(Lifting, ColonDecompositionOnAGrid) {
  for (std::uint64_t p : {2u, 3u}) {
    for (Exponent gamma = 0; gamma < p * p; ++gamma) {
      for (Exponent alpha = 1; alpha < p * p; ++alpha) {
        TwoVariableShape s{3, p, gamma, alpha};
        if (!s.digit_condition()) continue;
        const auto r = colon_decomposition_check(s);
        EXPECT_TRUE(r.ok()) << s.to_string();
      }
    }
  }
}

TEST(Lifting, BasesAreMonomialAndVerified) {
  for (const TwoVariableShape s : {TwoVariableShape{3, 2, 0, 3}, TwoVariableShape{3, 3, 1, 1},
                                   TwoVariableShape{2, 3, 2, 0}, TwoVariableShape{4, 2, 2, 1},
                                   TwoVariableShape{3, 3, 3, 5}}) {
    const auto I = s.ideal();
    const auto rep = lift_monomial_basis(s, FieldSpec::rationals());
    EXPECT_TRUE(rep.all_monomial) << s.to_string();
    const auto table = betti_table(I, FieldSpec::rationals());
    for (std::size_t i = 0; i <= s.n; ++i) {
      const auto v = verify_basis(I, rep.basis[i], i, FieldSpec::rationals(), table.total(i));
      EXPECT_TRUE(v.ok) << s.to_string() << " i=" << i << " " << v.detail;
    }
  }
}

TEST(Lifting, ShiftIdentityAndConnectingMap) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Monomial> g;
    for (int k = 0; k < 3; ++k) {
      std::vector<Exponent> e(3, 0);
      for (int d = 0; d < 1 + static_cast<int>(rng() % 3); ++d) ++e[rng() % 3];
      g.emplace_back(e);
    }
    const MonomialIdeal t_bar(3, g);
    EXPECT_TRUE(shift_identity_check(t_bar, FieldSpec::rationals()).holds) << t_bar;
    const auto T = extend_vars(t_bar, 4);
    const auto T2 = product(T, MonomialIdeal(4, {Monomial({0, 0, 1, 1})}));
    for (const auto& c : connecting_map_check(sum(T2, MonomialIdeal(4, {Monomial({0, 0, 0, 2})})),
                                              FieldSpec::rationals())) {
      EXPECT_TRUE(c.holds) << t_bar << " i=" << c.i;
    }
  }
}

TEST(Lifting, LayeredChainsOfTheUnitIdealAreEmpty) {
  const KoszulComplex K(MonomialIdeal::unit(2), FieldSpec::rationals());
  EXPECT_TRUE(layered_basis_chains(K, 2, {}, 1).empty());
}
