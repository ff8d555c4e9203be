#ifndef KOSZUL_CYCLES_HPP
#define KOSZUL_CYCLES_HPP

#include <cstddef>
#include <vector>

#include "koszul/koszul_complex.hpp"

namespace koszul {

/// Records that input and representative differ by a boundary:
/// input - d(witness) = representative.
struct CycleCertificate {
  KoszulChain input;
  KoszulChain representative;
  KoszulChain witness;  // degree input.degree() + 1
};

/// Builds a certificate, throwing VerificationFailure if the identity fails.
CycleCertificate certify(const KoszulComplex& K, KoszulChain input, KoszulChain representative,
                         KoszulChain witness);
bool check_certificate(const KoszulComplex& K, const CycleCertificate& c);

/// Throws InapplicableError unless z is a multigraded cycle (zero allowed).
void require_multigraded_cycle(const KoszulComplex& K, const KoszulChain& z);

/// Whether some other term of z has an index set differing from that of
/// term j in exactly one element.
bool has_neighbour(const KoszulComplex& K, const KoszulChain& z, std::size_t j);

/// m(u) <= m(sigma) for every term.
bool is_normalized(const KoszulChain& z);

struct NormalizedCycle {
  KoszulChain cycle;
  KoszulChain witness;  // z - d(witness) = cycle
};

/// Subtracts boundaries of (u / x_q) e_{sigma + q}, q = m(u), from the
/// largest offending term until m(u) <= m(sigma) everywhere.
NormalizedCycle normalize_cycle(const KoszulComplex& K, const KoszulChain& z);

struct H2Decomposition {
  std::vector<KoszulChain> monomial_cycles;
  KoszulChain witness;  // z - d(witness) = sum of monomial_cycles
  std::size_t steps = 0;
};

/// Splits a multigraded 2-cycle into monomial cycles modulo boundaries.
H2Decomposition decompose_h2_monomial(const KoszulComplex& K, const KoszulChain& z);

struct TopDegreeReduction {
  KoszulChain reduced;
  KoszulChain witness;  // z - d(witness) = reduced
};

/// For an (n-1)-cycle whose coefficients follow the sign pattern of
/// d e_{1..n}, returns a homologous chain with at most floor(n/2) terms.
/// Throws InapplicableError if the pattern fails; such a cycle splits
/// along top_degree_components.
TopDegreeReduction reduce_top_degree(const KoszulComplex& K, const KoszulChain& z);

/// The indices k with x^a / x_{[n]-k} a nonzero element, grouped by the
/// graph joining k and l whenever x^a / x_{[n]-{k,l}} lies outside I. The
/// restriction of an (n-1)-cycle to one component is again a cycle.
std::vector<std::vector<std::size_t>> top_degree_components(const KoszulComplex& K,
                                                            const Multidegree& a);

/// The terms of z whose index set misses an index of the given component.
KoszulChain restrict_to_component(const KoszulComplex& K, const KoszulChain& z,
                                  const std::vector<std::size_t>& component);

}  // namespace koszul

#endif
