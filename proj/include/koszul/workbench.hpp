#ifndef KOSZUL_WORKBENCH_HPP
#define KOSZUL_WORKBENCH_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "koszul/ideal.hpp"
#include "koszul/lifting.hpp"
#include "koszul/pborel.hpp"

namespace koszul {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

using Rng = std::mt19937_64;

// Random generators shared by the suites and the tests.
Monomial random_monomial(Rng& rng, std::size_t num_vars, std::uint64_t degree);
MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t max_vars, std::size_t max_gens,
                                    std::uint64_t max_degree);
/// Generator of a principal p-Borel ideal, degree in [1, max_degree].
Monomial random_pborel_generator(Rng& rng, std::size_t num_vars, std::uint64_t max_degree);
/// Shape x_{n-1}^gamma x_n^alpha with alpha_j + gamma_j < p digitwise.
TwoVariableShape random_shape(Rng& rng, std::size_t max_vars);
/// Sum of principal p-Borel ideals for one p in {2, 3}.
MonomialIdeal random_borel_type(Rng& rng, std::size_t max_vars, std::uint64_t& p);
MonomialIdeal random_strongly_stable(Rng& rng, std::size_t max_vars);

struct Refutation {
  std::size_t trial = 0;
  std::string detail;
  std::string replay;  // command line reproducing the trial
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> log;
  std::vector<Refutation> refutations;
  bool passed() const { return refutations.empty(); }
};

std::vector<std::string> suite_names();
std::size_t default_trials(const std::string& suite);
/// Trial k draws from an engine seeded with seed + k, so
/// `verify <suite> --seed <seed + k> --trials 1` replays it alone.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials);

struct ReproCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproResult {
  std::string example;
  std::vector<ReproCheck> checks;
  bool passed() const;
};

std::vector<std::string> example_names();
ReproResult reproduce(const std::string& example);

}  // namespace koszul

#endif
