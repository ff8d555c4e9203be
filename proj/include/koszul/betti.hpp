#ifndef KOSZUL_BETTI_HPP
#define KOSZUL_BETTI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/ideal.hpp"
#include "koszul/koszul_complex.hpp"

namespace koszul {

struct Corner {
  std::size_t t = 0;
  std::uint64_t r = 0;
  std::size_t value = 0;  // beta_{t, t + r}
  bool operator==(const Corner&) const = default;
};

/// Graded Betti numbers beta_{i,j}(S/I); absent entries are zero.
class BettiTable {
 public:
  explicit BettiTable(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

  const FieldSpec& field() const noexcept { return field_; }
  const std::map<std::pair<std::size_t, std::uint64_t>, std::size_t>& entries() const noexcept {
    return entries_;
  }
  std::size_t get(std::size_t i, std::uint64_t j) const;
  void add(std::size_t i, std::uint64_t j, std::size_t dim);
  /// Sum over j of beta_{i,j}.
  std::size_t total(std::size_t i) const;
  bool empty() const noexcept { return entries_.empty(); }

  std::size_t projective_dimension() const;
  /// max(j - i) over nonzero entries, i.e. reg(S/I). Throws on an empty table.
  std::int64_t regularity() const;
  /// reg(I) = reg(S/I) + 1.
  std::int64_t ideal_regularity() const { return regularity() + 1; }
  /// Positions where the t-regularity max{j - i : beta_{ij} != 0, i >= t}
  /// strictly exceeds that of t + 1, with their extremal Betti numbers.
  std::vector<Corner> corners() const;

  /// Compares entries only; the field tag is ignored.
  bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

 private:
  FieldSpec field_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> entries_;
};

struct MultigradedEntry {
  std::size_t i = 0;
  Multidegree a;
  std::size_t dim = 0;
};

struct LatticeElement {
  Multidegree a;
  std::size_t min_size = 0;  // fewest generators with lcm a
  std::size_t divisors = 0;  // generators dividing a
};

/// Nonempty-subset lcms of G(I), each with the range of subset sizes that
/// realize it, in canonical order.
std::vector<LatticeElement> lcm_lattice(const MonomialIdeal& I);

/// {lcm(T) : T in G(I), |T| = i}; {0} for i = 0.
std::vector<Multidegree> candidate_multidegrees(const MonomialIdeal& I, std::size_t i);

/// dim H_i(x; S/I)_a for i = 0..n at one multidegree.
std::vector<std::size_t> multidegree_betti(const MonomialIdeal& I, const Multidegree& a,
                                           const FieldSpec& field);

/// Nonzero multigraded Betti numbers. With brute_force, every multidegree
/// below lcm(G(I)) is visited instead of the lcm lattice.
std::vector<MultigradedEntry> multigraded_betti(const MonomialIdeal& I, const FieldSpec& field,
                                                bool brute_force = false);

/// Throws InapplicableError for the unit ideal.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, bool brute_force = false);

struct StrandHomology {
  std::size_t betti = 0;
  std::vector<KoszulChain> cycle_basis;
  std::vector<KoszulChain> boundary_basis;
  std::vector<KoszulChain> homology_representatives;
};

StrandHomology strand_homology(const MonomialIdeal& I, std::size_t i, const Multidegree& a,
                               const FieldSpec& field);

/// Betti numbers of S/I for strongly stable I from the Eliahou-Kervaire
/// formula beta_{i+1, deg u + i}(S/I) = sum C(m(u) - 1, i). Throws
/// InapplicableError if I is not strongly stable.
BettiTable ek_betti_stable(const MonomialIdeal& I);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace koszul

#endif
