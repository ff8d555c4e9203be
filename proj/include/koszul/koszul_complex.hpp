#ifndef KOSZUL_KOSZUL_COMPLEX_HPP
#define KOSZUL_KOSZUL_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/ideal.hpp"
#include "koszul/linalg.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

using Multidegree = Monomial;

/// One term coeff * u e_sigma.
struct KoszulTerm {
  Scalar coeff;
  Monomial u;
  IndexSubset sigma;
};

/// An element of K_i(x; S/I): a field-linear combination of u e_sigma with
/// u outside I and |sigma| = i. Terms are kept merged, nonzero, and sorted
/// descending in the Koszul element order, so terms().front() is in(z).
/// Chains are built through KoszulComplex, which knows the ideal.
class KoszulChain {
 public:
  KoszulChain(std::size_t num_vars, std::size_t degree, FieldSpec field)
      : n_(num_vars), degree_(degree), field_(field) {}

  std::size_t num_vars() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<KoszulTerm>& terms() const noexcept { return terms_; }
  std::size_t length() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading term in(z). Throws std::logic_error on the zero chain.
  const KoszulTerm& leading() const;
  /// Common multidegree u x_sigma of all terms, or nullopt if the chain is
  /// zero or not multigraded.
  std::optional<Multidegree> multidegree() const;
  bool is_multigraded() const;
  /// Coefficient of u e_sigma (zero if absent).
  Scalar coefficient(const Monomial& u, const IndexSubset& sigma) const;

  KoszulChain operator+(const KoszulChain& other) const;
  KoszulChain operator-(const KoszulChain& other) const;
  KoszulChain operator-() const;
  KoszulChain scaled(const Scalar& c) const;

  bool operator==(const KoszulChain& other) const;

  /// Human-readable, e.g. x2*x3*x4 e{1,3,4} - x1*x3*x4 e{2,3,4}.
  std::string to_string() const;

 private:
  friend class KoszulComplex;
  /// Merges duplicates, normalizes and drops zero coefficients, sorts.
  void canonicalize();

  std::size_t n_;
  std::size_t degree_;
  FieldSpec field_;
  std::vector<KoszulTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const KoszulChain& z);

/// The complex K(x; S/I) over a coefficient field.
class KoszulComplex {
 public:
  KoszulComplex(MonomialIdeal ideal, FieldSpec field);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return ideal_.num_vars(); }

  /// Builds a chain of homological degree i; terms with u in I vanish.
  /// Throws std::invalid_argument on a term with |sigma| != i or an index
  /// outside 1..n.
  KoszulChain chain(std::size_t i, std::vector<KoszulTerm> terms) const;
  KoszulChain element(const Monomial& u, const IndexSubset& sigma,
                      const Scalar& coeff = Scalar(1)) const;
  KoszulChain zero(std::size_t i) const;

  /// Koszul differential with d e_{j1<...<ji} = sum_k (-1)^{k+1} x_{jk} e_{sigma - jk}.
  KoszulChain boundary(const KoszulChain& z) const;
  bool is_cycle(const KoszulChain& z) const;
  /// v * z, with terms falling into I dropped.
  KoszulChain multiply(const KoszulChain& z, const Monomial& v) const;
  /// z wedge e_k.
  KoszulChain wedge(const KoszulChain& z, std::size_t k) const;

  /// x_t u in I for every t in sigma. Throws InapplicableError if u is in I.
  bool is_monomial_cycle(const Monomial& u, const IndexSubset& sigma) const;

  /// Basis of K_i(x; S/I)_a: pairs (x^a / x_sigma, sigma) with sigma in the
  /// support of a and x^a / x_sigma outside I, sorted descending.
  std::vector<std::pair<Monomial, IndexSubset>> strand_basis(std::size_t i,
                                                             const Multidegree& a) const;

 private:
  void check_chain(const KoszulChain& z) const;
  MonomialIdeal ideal_;
  FieldSpec field_;
};

/// Sign of e_sigma wedge e_k as e_{sigma + k}: (-1)^{#{j in sigma : j > k}}.
int wedge_sign(const IndexSubset& sigma, std::size_t k);

/// The multidegree-a part of K(x; S/I) around homological degree i:
/// bases of K_{i-1}, K_i, K_{i+1} and the two differentials as matrices.
class Strand {
 public:
  Strand(const KoszulComplex& complex, std::size_t i, Multidegree a);

  std::size_t degree() const noexcept { return i_; }
  const Multidegree& multidegree() const noexcept { return a_; }
  const KoszulComplex& complex() const noexcept { return complex_; }
  const std::vector<std::pair<Monomial, IndexSubset>>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  /// Coordinates of a degree-i chain in basis(); throws std::invalid_argument
  /// if the chain has terms outside this strand.
  Vector coordinates(const KoszulChain& z) const;
  KoszulChain chain_from(const Vector& coords) const;

  /// d_i: K_i(a) -> K_{i-1}(a), rows indexed by the lower basis.
  const SparseMatrix& lower_differential() const noexcept { return d_lower_; }
  /// d_{i+1}: K_{i+1}(a) -> K_i(a), rows indexed by basis().
  const SparseMatrix& upper_differential() const noexcept { return d_upper_; }
  const std::vector<std::pair<Monomial, IndexSubset>>& upper_basis() const noexcept {
    return upper_basis_;
  }

  /// Kernel basis of d_i (as chains).
  std::vector<KoszulChain> cycle_basis() const;
  /// Independent boundaries spanning the image of d_{i+1}.
  std::vector<KoszulChain> boundary_basis() const;
  std::size_t cycle_dimension() const;
  std::size_t boundary_dimension() const;
  /// dim H_i(x; S/I)_a.
  std::size_t betti() const;
  /// Cycles whose classes form a basis of the homology.
  std::vector<KoszulChain> homology_representatives() const;

  bool in_boundary(const KoszulChain& z) const;
  bool same_class(const KoszulChain& z, const KoszulChain& w) const;
  /// Dimension of the span of the classes of the given chains.
  std::size_t class_rank(const std::vector<KoszulChain>& chains) const;
  /// A chain y of degree i + 1 with d(y) = z, or nullopt if z is not a boundary.
  std::optional<KoszulChain> boundary_preimage(const KoszulChain& z) const;

  /// Vectors of the image of d_{i+1} in basis coordinates.
  const std::vector<Vector>& boundary_vectors() const;

 private:
  KoszulComplex complex_;
  std::size_t i_;
  Multidegree a_;
  std::vector<std::pair<Monomial, IndexSubset>> basis_;
  std::vector<std::pair<Monomial, IndexSubset>> lower_basis_;
  std::vector<std::pair<Monomial, IndexSubset>> upper_basis_;
  SparseMatrix d_lower_;
  SparseMatrix d_upper_;
  mutable std::optional<std::vector<Vector>> boundary_vectors_;
  mutable std::optional<IncrementalBasis> boundary_span_;
  mutable std::vector<std::size_t> boundary_columns_;  // accepted upper columns
  const IncrementalBasis& boundary_span() const;
};

/// Matrix of d from the span of source to the span of target, both bases of
/// one multidegree in consecutive homological degrees.
SparseMatrix strand_differential(const std::vector<std::pair<Monomial, IndexSubset>>& source,
                                 const std::vector<std::pair<Monomial, IndexSubset>>& target);

/// All (u, sigma) supported at multidegree a with |sigma| = i, u outside I,
/// without sorting. Exposed for enumeration-heavy callers.
std::vector<std::pair<Monomial, IndexSubset>> strand_elements(const MonomialIdeal& I,
                                                              std::size_t i,
                                                              const Multidegree& a);

}  // namespace koszul

#endif
