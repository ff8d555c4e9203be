#include "koszul/pborel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "koszul/error.hpp"

namespace koszul {

MonomialIdeal prefix_frobenius_power(std::size_t num_vars, std::size_t q, std::uint64_t pj,
                                     std::size_t k) {
  if (pj > std::numeric_limits<Exponent>::max()) throw std::overflow_error("p^j too large");
  MonomialIdeal base =
      frobenius_power(MonomialIdeal::prefix(num_vars, q), static_cast<Exponent>(pj));
  return power(base, k);
}

PBorelFactorization::PBorelFactorization(std::size_t num_vars, std::uint64_t p)
    : n_(num_vars), p_(p), alpha_(num_vars) {
  require_prime(p);
}

Exponent PBorelFactorization::alpha(std::size_t q, std::size_t j) const {
  if (q < 1 || q > n_) throw std::out_of_range("factor index outside 1..n");
  const auto& row = alpha_[q - 1];
  return j < row.size() ? row[j] : 0;
}

void PBorelFactorization::set_alpha(std::size_t q, std::size_t j, Exponent value) {
  if (q < 1 || q > n_) throw std::out_of_range("factor index outside 1..n");
  auto& row = alpha_[q - 1];
  if (row.size() <= j) row.resize(j + 1, 0);
  row[j] = value;
}

std::size_t PBorelFactorization::layers() const noexcept {
  std::size_t s = 0;
  for (const auto& row : alpha_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) s = std::max(s, j + 1);
    }
  }
  return s;
}

bool PBorelFactorization::only_full_factors() const noexcept {
  for (std::size_t q = 0; q + 1 < n_; ++q) {
    for (auto a : alpha_[q]) {
      if (a != 0) return false;
    }
  }
  return true;
}

MonomialIdeal PBorelFactorization::expand_range(std::size_t q_lo, std::size_t q_hi) const {
  MonomialIdeal r = MonomialIdeal::unit(n_);
  for (std::size_t q = q_lo; q <= q_hi && q <= n_; ++q) {
    const auto& row = alpha_[q - 1];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      r = product(r, prefix_frobenius_power(n_, q, ipow(p_, j), row[j]));
    }
  }
  return r;
}

MonomialIdeal PBorelFactorization::expand() const { return expand_range(1, n_); }

PBorelFactorization principal_p_borel(const Monomial& u, std::uint64_t p) {
  PBorelFactorization F(u.num_vars(), p);
  for (std::size_t q = 1; q <= u.num_vars(); ++q) {
    const auto digits = p_adic(u.nu(q), p).digits;
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (digits[j] != 0) F.set_alpha(q, j, static_cast<Exponent>(digits[j]));
    }
  }
  return F;
}

std::optional<Monomial> principal_generator(const MonomialIdeal& I, std::uint64_t p) {
  if (I.is_zero()) return std::nullopt;
  const auto smallest = *std::min_element(
      I.gens().begin(), I.gens().end(),
      [](const Monomial& a, const Monomial& b) { return rlex_compare(a, b) < 0; });
  if (principal_p_borel(smallest, p).expand() == I) return smallest;
  return std::nullopt;
}

std::pair<MonomialIdeal, MonomialIdeal> split_factorization(const PBorelFactorization& F,
                                                            std::size_t a) {
  if (a < 1 || a >= F.num_vars()) throw std::out_of_range("split index outside 1..n-1");
  return {F.expand_range(1, a), F.expand_range(a + 1, F.num_vars())};
}

std::pair<Monomial, Monomial> split_monomial(const Monomial& u, std::size_t a) {
  if (a < 1 || a >= u.num_vars()) throw std::out_of_range("split index outside 1..n-1");
  Monomial lo(u.num_vars()), hi(u.num_vars());
  for (std::size_t q = 1; q <= u.num_vars(); ++q) {
    (q <= a ? lo : hi).set_exponent(q, u.nu(q));
  }
  return {lo, hi};
}

BorelChainReport borel_chain(const MonomialIdeal& I) {
  if (I.is_zero()) throw InapplicableError("the Borel chain is undefined for the zero ideal");
  if (auto j = borel_type_failure(I)) {
    throw InapplicableError("ideal is not of Borel type: saturations differ at j = " +
                            std::to_string(*j));
  }
  BorelChainReport report;
  MonomialIdeal cur = I;
  while (!cur.is_unit()) {
    BorelStage st;
    st.ideal = cur;
    st.index = *cur.max_index();
    st.j = restrict_to_prefix(cur, st.index);
    st.j_sat = saturation(st.j);
    // Once a layer at or above the top generator degree of J^sat vanishes,
    // every later layer vanishes too.
    const auto top_gen = st.j_sat.max_generator_degree();
    for (std::uint64_t d = 0;; ++d) {
      const auto count = count_difference_in_degree(st.j_sat, st.j, d);
      if (count != 0) {
        st.top_degree = d;
        st.top_dimension = count;
      } else if (d >= top_gen) {
        break;
      }
    }
    report.stages.push_back(st);
    cur = colon_var_saturate(cur, st.index);
  }
  return report;
}

std::vector<ExtremalCandidate> extremal_via_chain(const MonomialIdeal& I) {
  std::vector<ExtremalCandidate> out;
  for (const auto& st : borel_chain(I).stages) {
    if (st.top_degree) out.push_back({st.index, *st.top_degree, st.top_dimension});
  }
  return out;
}

MonomialIdeal expand_layers(std::size_t num_vars, std::uint64_t p,
                            const std::vector<CasLayer>& layers) {
  MonomialIdeal r = MonomialIdeal::unit(num_vars);
  for (const auto& l : layers) {
    r = product(r, prefix_frobenius_power(num_vars, num_vars, ipow(p, l.j), l.gamma));
  }
  return r;
}

CasNormalForm lemma_cas_normalize(const std::vector<Exponent>& alpha, std::uint64_t p) {
  require_prime(p);
  std::vector<std::uint64_t> a(alpha.begin(), alpha.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      // Largest s >= 1 with a_j >= 2 p^s.
      std::size_t s = 0;
      for (std::uint64_t ps = p; 2 * ps <= a[j]; ps *= p) ++s;
      if (s == 0) continue;
      a[j] -= ipow(p, s);
      if (a.size() <= j + s) a.resize(j + s + 1, 0);
      a[j + s] += 1;
      changed = true;
    }
  }
  CasNormalForm out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0) out.layers.push_back({j, static_cast<Exponent>(a[j])});
  }
  for (std::size_t t = 0; t + 1 < out.layers.size(); ++t) {
    const auto bound = ipow(p, out.layers[t + 1].j - out.layers[t].j);
    if (out.layers[t].gamma >= bound) out.bound_violated = true;
  }
  std::vector<CasLayer> original;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0) original.push_back({j, alpha[j]});
  }
  if (expand_layers(2, p, original) != expand_layers(2, p, out.layers)) {
    throw VerificationFailure("normalized layers generate a different ideal");
  }
  return out;
}

}  // namespace koszul
