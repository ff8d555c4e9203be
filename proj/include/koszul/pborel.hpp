#ifndef KOSZUL_PBOREL_HPP
#define KOSZUL_PBOREL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/ideal.hpp"

namespace koszul {

/// ((x_1..x_q)^{[p^j]})^k in num_vars variables.
MonomialIdeal prefix_frobenius_power(std::size_t num_vars, std::size_t q, std::uint64_t pj,
                                     std::size_t k);

/// I = prod_q prod_j ((x_1..x_q)^{[p^j]})^{alpha(q, j)}.
class PBorelFactorization {
 public:
  PBorelFactorization(std::size_t num_vars, std::uint64_t p);

  std::size_t num_vars() const noexcept { return n_; }
  std::uint64_t p() const noexcept { return p_; }

  /// alpha(q, j) for 1 <= q <= n and j >= 0; zero when never set.
  Exponent alpha(std::size_t q, std::size_t j) const;
  void set_alpha(std::size_t q, std::size_t j, Exponent value);
  /// One past the largest j with some nonzero alpha(q, j).
  std::size_t layers() const noexcept;
  /// Whether every nonzero alpha sits at q = n (a product of powers of m^{[p^j]}).
  bool only_full_factors() const noexcept;

  MonomialIdeal expand() const;
  /// The product of the factors with q in [q_lo, q_hi].
  MonomialIdeal expand_range(std::size_t q_lo, std::size_t q_hi) const;

 private:
  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::vector<Exponent>> alpha_;  // alpha_[q-1][j]
};

/// Factorization of the smallest p-Borel ideal containing u: alpha(q, j) is
/// the j-th p-adic digit of nu_q(u).
PBorelFactorization principal_p_borel(const Monomial& u, std::uint64_t p);

/// If I is the principal p-Borel ideal of one of its generators, that
/// generator (the rlex-smallest one); otherwise nullopt.
std::optional<Monomial> principal_generator(const MonomialIdeal& I, std::uint64_t p);

/// (J_{<=a}, J_{>a}) for 1 <= a < n.
std::pair<MonomialIdeal, MonomialIdeal> split_factorization(const PBorelFactorization& F,
                                                            std::size_t a);
/// (u_{<=a}, u_{>a}) with u_{<=a} supported on x_1..x_a.
std::pair<Monomial, Monomial> split_monomial(const Monomial& u, std::size_t a);

struct BorelStage {
  MonomialIdeal ideal;       // I_e
  std::size_t index = 0;     // n_e = m(I_e)
  MonomialIdeal j;           // I_e restricted to K[x_1..x_{n_e}]
  MonomialIdeal j_sat;       // its saturation in that ring
  std::optional<std::uint64_t> top_degree;  // s(J^sat/J); nullopt if J^sat = J
  std::size_t top_dimension = 0;            // dim (J^sat/J)_s
};

struct BorelChainReport {
  std::vector<BorelStage> stages;
};

/// Throws InapplicableError for the zero ideal or a non-Borel-type ideal.
BorelChainReport borel_chain(const MonomialIdeal& I);

struct ExtremalCandidate {
  std::size_t t = 0;
  std::uint64_t r = 0;
  std::size_t dimension = 0;
  bool operator==(const ExtremalCandidate&) const = default;
};

/// Candidate corners (n_i, s_i) with dimensions from the Borel chain.
std::vector<ExtremalCandidate> extremal_via_chain(const MonomialIdeal& I);

struct CasLayer {
  std::size_t j = 0;
  Exponent gamma = 0;
  bool operator==(const CasLayer&) const = default;
};

struct CasNormalForm {
  std::vector<CasLayer> layers;
  /// Some gamma_t >= p^{j_{t+1} - j_t}: the strict digit bound is not met.
  bool bound_violated = false;
};

/// Rewrites prod_j (m^{[p^j]})^{alpha_j} in two variables with
/// (m^{[q]})^{2p^s} = (m^{[q]})^{p^s} m^{[q p^s]} until no exponent admits
/// it, and checks the ideal is unchanged. Throws VerificationFailure if not.
CasNormalForm lemma_cas_normalize(const std::vector<Exponent>& alpha, std::uint64_t p);

/// prod_t (m^{[p^{j_t}]})^{gamma_t} in num_vars variables.
MonomialIdeal expand_layers(std::size_t num_vars, std::uint64_t p,
                            const std::vector<CasLayer>& layers);

}  // namespace koszul

#endif
