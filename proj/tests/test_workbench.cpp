#include <gtest/gtest.h>

#include "koszul/pborel.hpp"
#include "koszul/workbench.hpp"

using namespace koszul;

TEST(Workbench, GeneratorsAreDeterministic) {
  Rng a(7), b(7);
  for (int k = 0; k < 20; ++k) {
    EXPECT_EQ(random_monomial_ideal(a, 4, 5, 4), random_monomial_ideal(b, 4, 5, 4));
  }
}

TEST(Workbench, GeneratorsRespectTheirContracts) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const auto s = random_shape(rng, 5);
    EXPECT_TRUE(s.digit_condition()) << s.n << " " << s.p << " " << s.gamma << " " << s.alpha;
    const auto I = random_strongly_stable(rng, 4);
    EXPECT_TRUE(is_strongly_stable(I));
    std::uint64_t p = 0;
    const auto B = random_borel_type(rng, 4, p);
    EXPECT_TRUE(p == 2 || p == 3);
    EXPECT_TRUE(is_p_borel(B, p));
  }
}

TEST(Workbench, SuitesAreReproducible) {
  const auto a = run_suite("ek", 99, 3);
  const auto b = run_suite("ek", 99, 3);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.log, b.log);
}

TEST(Workbench, SmallRunsOfEverySuitePass) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, kDefaultSeed, name == "lemmas3" ? 200 : 3);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.refutations.empty() ? "" : r.refutations[0].detail);
    EXPECT_GT(r.checks, 0u) << name;
  }
}

TEST(Workbench, UnknownSuiteIsRejected) {
  EXPECT_THROW(run_suite("nope", 1, 1), std::invalid_argument);
  EXPECT_THROW(reproduce("nope"), std::invalid_argument);
}

TEST(Workbench, EveryExampleReproduces) {
  for (const auto& name : example_names()) {
    const auto r = reproduce(name);
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) {
      EXPECT_TRUE(c.pass) << name << " / " << c.label << ": expected " << c.expected << ", got " << c.actual;
    }
  }
}
