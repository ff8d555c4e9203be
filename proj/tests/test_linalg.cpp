#include <gtest/gtest.h>

#include <random>

#include "koszul/field.hpp"
#include "koszul/linalg.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

std::vector<Vector> random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::vector<Vector> m(rows, Vector(cols, 0));
  for (auto& r : m) {
    for (auto& x : r) x = static_cast<int>(rng() % (2 * range + 1)) - range;
  }
  return m;
}

}  // namespace

TEST(Field, ParseAndArithmetic) {
  EXPECT_TRUE(FieldSpec::parse("qq").is_rational());
  EXPECT_EQ(FieldSpec::parse("gf:3").characteristic(), 3u);
  EXPECT_THROW(FieldSpec::parse("gf:4"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("reals"), std::invalid_argument);
  const auto f = FieldSpec::prime(5);
  EXPECT_EQ(f.mul(3, 4), Scalar(2));
  EXPECT_EQ(f.div(1, 2), Scalar(3));
  EXPECT_TRUE(f.is_zero(10));
  EXPECT_EQ(FieldSpec::rationals().div(1, 3), Scalar(1, 3));
}

TEST(Linalg, RankMatchesDenseOracle) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto d = random_dense(rng, r, c, 2);
    if (trial % 3 == 0 && r > 1) d[r - 1] = d[0];
    const auto m = SparseMatrix::from_dense(d, c);
    std::vector<std::vector<mpq_class>> q(d.begin(), d.end());
    for (std::uint64_t p : {0u, 2u, 3u}) {
      const auto f = p ? FieldSpec::prime(p) : FieldSpec::rationals();
      EXPECT_EQ(rank(m, f), oracle::dense_rank(q, p));
    }
  }
}

TEST(Linalg, KernelVectorsAreAnnihilatedAndComplete) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const auto m = SparseMatrix::from_dense(random_dense(rng, r, c, 2), c);
    for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
      const auto ker = kernel_basis(m, f);
      EXPECT_EQ(ker.size() + rank(m, f), c);
      for (const auto& v : ker) {
        for (const auto& x : m.apply(v, f)) EXPECT_TRUE(f.is_zero(x));
      }
      EXPECT_EQ(rank_of(ker, c, f), ker.size());
    }
  }
}

TEST(Linalg, SolveFindsSolutionsOrReportsInconsistency) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const auto m = SparseMatrix::from_dense(random_dense(rng, r, c, 3), c);
    const auto f = FieldSpec::rationals();
    Vector x(c);
    for (auto& v : x) v = static_cast<int>(rng() % 5) - 2;
    const auto b = m.apply(x, f);
    const auto sol = solve(m, b, f);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol, f), b);
  }
  // x + y = 1 and x + y = 2 has no solution.
  const auto m = SparseMatrix::from_dense({{1, 1}, {1, 1}}, 2);
  EXPECT_FALSE(solve(m, {1, 2}, FieldSpec::rationals()).has_value());
}

TEST(Linalg, QuotientRepresentativesCountTheQuotient) {
  const auto f = FieldSpec::rationals();
  const std::vector<Vector> z = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<Vector> b = {{1, 1, 0}};
  EXPECT_EQ(quotient_representatives(z, b, 3, f).size(), 2u);
}

TEST(Linalg, IncrementalBasisExpressesMembers) {
  IncrementalBasis basis(3, FieldSpec::prime(3), true);
  EXPECT_TRUE(basis.add({1, 2, 0}));
  EXPECT_TRUE(basis.add({0, 1, 1}));
  EXPECT_FALSE(basis.add({1, 0, 1}));  // (1,2,0) + 2(0,1,1) mod 3
  EXPECT_EQ(basis.rank(), 2u);
  const auto c = basis.express({1, 0, 1});
  ASSERT_TRUE(c.has_value());
  EXPECT_FALSE(basis.contains({0, 0, 1}));
}

TEST(Linalg, GF2DiffersFromRationals) {
  // The 3x3 matrix J - I has determinant 2.
  const auto m = SparseMatrix::from_dense({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 3);
  EXPECT_EQ(rank(m, FieldSpec::rationals()), 3u);
  EXPECT_EQ(rank(m, FieldSpec::prime(2)), 2u);
}
