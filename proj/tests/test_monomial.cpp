#include <gtest/gtest.h>

#include <random>

#include "koszul/error.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/monomial.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {
Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }
}  // namespace

TEST(Monomial, DegreeDivisionAndSupport) {
  const auto u = mono({2, 0, 3});
  EXPECT_EQ(u.degree(), 5u);
  EXPECT_EQ(u.max_index(), 3u);
  EXPECT_EQ(u.nu(1), 2u);
  EXPECT_TRUE(mono({1, 0, 3}).divides(u));
  EXPECT_FALSE(mono({0, 1, 0}).divides(u));
  EXPECT_EQ(u / mono({1, 0, 1}), mono({1, 0, 2}));
  EXPECT_THROW(u / mono({0, 1, 0}), std::domain_error);
  EXPECT_TRUE(Monomial(3).is_unit());
  EXPECT_EQ(Monomial(3).max_index(), std::nullopt);
}

TEST(Monomial, LcmGcdAgainstComponentwiseOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Exponent> a(4), b(4), l(4), g(4);
    for (int k = 0; k < 4; ++k) {
      a[k] = rng() % 5;
      b[k] = rng() % 5;
      l[k] = std::max(a[k], b[k]);
      g[k] = std::min(a[k], b[k]);
    }
    EXPECT_EQ(lcm(mono(a), mono(b)), mono(l));
    EXPECT_EQ(gcd(mono(a), mono(b)), mono(g));
    EXPECT_EQ(mono(a) * mono(b), lcm(mono(a), mono(b)) * gcd(mono(a), mono(b)));
  }
}

TEST(Monomial, RenderingAndMismatch) {
  EXPECT_EQ(mono({3, 1, 0}).to_string(), "x1^3*x2");
  EXPECT_EQ(Monomial(2).to_string(), "1");
  EXPECT_THROW(mono({1, 0}) * mono({1, 0, 0}), DimensionMismatch);
  EXPECT_EQ(mono({1, 2}).frobenius(3), mono({3, 6}));
}

TEST(Monomial, RlexComparesLastVariableFirst) {
  // x1^2 > x1 x2 > x2^2 in rlex among degree two monomials in two variables.
  EXPECT_EQ(rlex_compare(mono({2, 0}), mono({1, 1})), std::strong_ordering::greater);
  EXPECT_EQ(rlex_compare(mono({1, 1}), mono({0, 2})), std::strong_ordering::greater);
  EXPECT_EQ(rlex_compare(mono({1, 1}), mono({1, 1})), std::strong_ordering::equal);
}

TEST(IndexSubset, Operations) {
  const IndexSubset s{1, 3, 4};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.max(), 4u);
  EXPECT_EQ(s.without(3), (IndexSubset{1, 4}));
  EXPECT_EQ(s.with(2), (IndexSubset{1, 2, 3, 4}));
  EXPECT_EQ(s.rank_of(4), 2u);
  EXPECT_EQ(s.to_monomial(4), mono({1, 0, 1, 1}));
}

TEST(IndexSubset, WedgeSignCountsLargerIndices) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t mask = rng() % 64;
    const std::size_t k = 1 + rng() % 6;
    const IndexSubset s(mask);
    if (s.contains(k)) continue;
    int larger = 0;
    for (auto j : s.indices()) larger += j > k ? 1 : 0;
    EXPECT_EQ(wedge_sign(s, k), larger % 2 ? -1 : 1);
  }
}

TEST(PAdic, DigitsAndValue) {
  const auto e = p_adic(19, 3);
  EXPECT_EQ(e.digits, (std::vector<std::uint64_t>{1, 0, 2}));
  EXPECT_EQ(e.value(), 19u);
  EXPECT_EQ(ipow(3, 4), 81u);
  EXPECT_THROW(require_prime(4), std::invalid_argument);
}

TEST(PAdic, LeqPMatchesBinomialParity) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::uint64_t b = 0; b < 30; ++b) {
      for (std::uint64_t a = 0; a <= b; ++a) {
        EXPECT_EQ(leq_p(a, b, p), oracle::binomial_nonzero_mod(b, a, p)) << a << " " << b << " " << p;
      }
    }
  }
}
