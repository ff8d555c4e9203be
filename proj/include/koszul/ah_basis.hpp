#ifndef KOSZUL_AH_BASIS_HPP
#define KOSZUL_AH_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/koszul_complex.hpp"
#include "koszul/pborel.hpp"

namespace koszul {

/// The monomial cycle w v'^q x_sigma^{q-1} e_sigma with q = p^layer,
/// v' = v / x_{m(v)} and m(sigma) = m(v).
struct AHBasisElement {
  std::size_t layer = 0;
  std::uint64_t q = 1;
  Monomial w;
  Monomial v;
  Monomial v_prime;
  IndexSubset sigma;
  Monomial u;  // the coefficient monomial

  KoszulChain chain(const KoszulComplex& K) const { return K.element(u, sigma); }
  Multidegree multidegree() const { return u * sigma.to_monomial(u.num_vars()); }
};

/// Candidate monomial cycles for prod_t (m^{[p^{j_t}]})^{gamma_t} in
/// num_vars variables, with layers given by increasing j. For i = 1 only the
/// lowest layer contributes, giving (g / x_{m(g)}) e_{m(g)} for g in G(I).
std::vector<AHBasisElement> c_basis(std::size_t num_vars, std::uint64_t p,
                                    const std::vector<CasLayer>& layers, std::size_t i);

/// The basis for I = prod_j (m^{[p^j]})^{alpha_j}. Throws InapplicableError
/// if the factorization has a factor other than m, or if some alpha_j >= p.
std::vector<AHBasisElement> ah_basis(const PBorelFactorization& F, std::size_t i);

/// The layers (j, alpha_j) of a factorization with only full factors.
std::vector<CasLayer> full_layers(const PBorelFactorization& F);

struct BasisVerification {
  bool ok = true;
  /// "cycle", "multigraded", "independence" or "count"; empty when ok.
  std::string failed_check;
  std::string detail;
  std::size_t candidates = 0;
  std::size_t betti = 0;
};

/// Whether the classes of the candidates form a basis of H_i(x; S/I): each
/// is a multigraded cycle, their classes are independent, and their number
/// equals the total Betti number (computed unless supplied).
BasisVerification verify_basis(const MonomialIdeal& I, const std::vector<KoszulChain>& candidates,
                               std::size_t i, const FieldSpec& field,
                               std::optional<std::size_t> total_betti = std::nullopt);

}  // namespace koszul

#endif
