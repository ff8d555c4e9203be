#ifndef KOSZUL_H3_REDUCTION_HPP
#define KOSZUL_H3_REDUCTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/cycles.hpp"

namespace koszul {

/// One step: a cycle y = phi + d(w) with in(y) = in(z) and at most four
/// terms, where phi is a monomial or binomial cycle.
struct H3Step {
  KoszulTerm leading;
  std::string rule;  // "short", "monomial", "exchange", "binomial", "two-neighbour"
  KoszulChain y;
  KoszulChain companion;  // phi scaled as subtracted from z
};

struct H3Reduction {
  std::vector<H3Step> steps;
  std::vector<KoszulChain> companions;  // each of length <= 2
  /// representative = sum of companions.
  CycleCertificate certificate;
};

/// Rewrites a multigraded 3-cycle over a principal p-Borel ideal as a sum
/// of monomial and binomial cycles modulo boundaries. Throws
/// InapplicableError if the ideal is not principal p-Borel, or if no step of
/// the case analysis applies at some leading term (the message names the
/// failing condition).
H3Reduction reduce_h3_principal_pborel(const KoszulComplex& K, std::uint32_t p,
                                       const KoszulChain& z);

}  // namespace koszul

#endif
