#include "koszul/betti.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "koszul/error.hpp"
#include "koszul/linalg.hpp"

namespace koszul {

namespace {

// Ranks over Q are at least the ranks mod any prime, so homology that
// vanishes mod this prime vanishes over Q too.
constexpr std::uint32_t kScreeningPrime = 2147483647U;

}  // namespace

std::size_t BettiTable::get(std::size_t i, std::uint64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(std::size_t i, std::uint64_t j, std::size_t dim) {
  if (dim == 0) return;
  entries_[{i, j}] += dim;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t s = 0;
  for (const auto& [key, dim] : entries_) {
    if (key.first == i) s += dim;
  }
  return s;
}

std::size_t BettiTable::projective_dimension() const {
  if (entries_.empty()) throw std::logic_error("empty Betti table");
  std::size_t pd = 0;
  for (const auto& [key, dim] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::regularity() const {
  if (entries_.empty()) throw std::logic_error("empty Betti table");
  std::int64_t reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, dim] : entries_) {
    reg = std::max(reg, static_cast<std::int64_t>(key.second) - static_cast<std::int64_t>(key.first));
  }
  return reg;
}

std::vector<Corner> BettiTable::corners() const {
  const auto pd = projective_dimension();
  std::vector<std::int64_t> r(pd + 2, std::numeric_limits<std::int64_t>::min());
  for (std::size_t t = pd + 1; t-- > 0;) {
    r[t] = r[t + 1];
    for (const auto& [key, dim] : entries_) {
      if (key.first == t) {
        r[t] = std::max(r[t], static_cast<std::int64_t>(key.second) - static_cast<std::int64_t>(t));
      }
    }
  }
  std::vector<Corner> out;
  for (std::size_t t = 0; t <= pd; ++t) {
    if (r[t] > r[t + 1]) {
      const auto rr = static_cast<std::uint64_t>(r[t]);
      out.push_back({t, rr, get(t, t + rr)});
    }
  }
  return out;
}

std::vector<LatticeElement> lcm_lattice(const MonomialIdeal& I) {
  const auto& gens = I.gens();
  std::unordered_map<Monomial, std::size_t, MonomialHash> min_size;
  std::vector<Monomial> frontier;
  for (const auto& g : gens) {
    if (min_size.emplace(g, 1).second) frontier.push_back(g);
  }
  for (std::size_t layer = 2; !frontier.empty(); ++layer) {
    std::vector<Monomial> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        Monomial b = lcm(a, g);
        if (min_size.emplace(b, layer).second) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }
  std::vector<LatticeElement> out;
  out.reserve(min_size.size());
  for (const auto& [a, size] : min_size) {
    std::size_t divisors = 0;
    for (const auto& g : gens) divisors += g.divides(a) ? 1 : 0;
    out.push_back({a, size, divisors});
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeElement& x, const LatticeElement& y) { return canonical_less(x.a, y.a); });
  return out;
}

std::vector<Multidegree> candidate_multidegrees(const MonomialIdeal& I, std::size_t i) {
  if (i == 0) return {Monomial(I.num_vars())};
  std::vector<Multidegree> out;
  for (const auto& e : lcm_lattice(I)) {
    if (e.min_size <= i && i <= e.divisors) out.push_back(e.a);
  }
  return out;
}

namespace {

std::vector<std::size_t> betti_at(const MonomialIdeal& I, const Multidegree& a,
                                  const FieldSpec& field) {
  const std::size_t s = static_cast<std::size_t>(std::popcount(a.support_mask()));
  const std::size_t n = I.num_vars();
  std::vector<std::vector<std::pair<Monomial, IndexSubset>>> k(s + 1);
  for (std::size_t i = 0; i <= s; ++i) k[i] = strand_elements(I, i, a);
  // ranks[i] = rank of d_i : K_i -> K_{i-1}; zero for i = 0 and i > s.
  std::vector<std::size_t> ranks(s + 2, 0);
  for (std::size_t i = 1; i <= s; ++i) {
    if (k[i].empty() || k[i - 1].empty()) continue;
    ranks[i] = rank(strand_differential(k[i], k[i - 1]), field);
  }
  std::vector<std::size_t> out(n + 1, 0);
  for (std::size_t i = 0; i <= s; ++i) out[i] = k[i].size() - ranks[i] - ranks[i + 1];
  return out;
}

std::vector<Multidegree> multidegrees_to_visit(const MonomialIdeal& I, bool brute_force) {
  std::vector<Multidegree> out;
  if (brute_force) {
    const Monomial top = I.generator_lcm();
    std::vector<Exponent> e(I.num_vars(), 0);
    while (true) {
      out.emplace_back(e);
      std::size_t k = 0;
      while (k < e.size() && e[k] == top.exps()[k]) e[k++] = 0;
      if (k == e.size()) break;
      ++e[k];
    }
    return out;
  }
  out.push_back(Monomial(I.num_vars()));
  for (auto& e : lcm_lattice(I)) out.push_back(std::move(e.a));
  return out;
}

}  // namespace

std::vector<std::size_t> multidegree_betti(const MonomialIdeal& I, const Multidegree& a,
                                           const FieldSpec& field) {
  if (a.num_vars() != I.num_vars()) throw DimensionMismatch("multidegree from a different ring");
  if (field.is_rational()) {
    auto screened = betti_at(I, a, FieldSpec::prime(kScreeningPrime));
    if (std::all_of(screened.begin(), screened.end(), [](std::size_t b) { return b == 0; })) {
      return screened;
    }
  }
  return betti_at(I, a, field);
}

std::vector<MultigradedEntry> multigraded_betti(const MonomialIdeal& I, const FieldSpec& field,
                                                bool brute_force) {
  std::vector<MultigradedEntry> out;
  for (const auto& a : multidegrees_to_visit(I, brute_force)) {
    const auto b = multidegree_betti(I, a, field);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] != 0) out.push_back({i, a, b[i]});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MultigradedEntry& x, const MultigradedEntry& y) {
    return x.i < y.i;
  });
  return out;
}

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, bool brute_force) {
  if (I.is_unit()) throw InapplicableError("S/I is zero for the unit ideal");
  BettiTable t(field);
  for (const auto& e : multigraded_betti(I, field, brute_force)) t.add(e.i, e.a.degree(), e.dim);
  return t;
}

StrandHomology strand_homology(const MonomialIdeal& I, std::size_t i, const Multidegree& a,
                               const FieldSpec& field) {
  const KoszulComplex K(I, field);
  const Strand s(K, i, a);
  return {s.betti(), s.cycle_basis(), s.boundary_basis(), s.homology_representatives()};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

BettiTable ek_betti_stable(const MonomialIdeal& I) {
  if (!is_strongly_stable(I)) throw InapplicableError("ideal is not strongly stable");
  if (I.is_unit()) throw InapplicableError("S/I is zero for the unit ideal");
  BettiTable t(FieldSpec::rationals());
  t.add(0, 0, 1);
  for (const auto& u : I.gens()) {
    const auto m = *u.max_index();
    for (std::size_t i = 0; i < m; ++i) t.add(i + 1, u.degree() + i, binomial(m - 1, i));
  }
  return t;
}

}  // namespace koszul
