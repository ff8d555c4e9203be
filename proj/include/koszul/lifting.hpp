#ifndef KOSZUL_LIFTING_HPP
#define KOSZUL_LIFTING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/ah_basis.hpp"
#include "koszul/betti.hpp"

namespace koszul {

/// The principal p-Borel ideal generated by x_{n-1}^gamma x_n^alpha.
struct TwoVariableShape {
  std::size_t n = 2;
  std::uint64_t p = 2;
  Exponent gamma = 0;
  Exponent alpha = 0;

  MonomialIdeal ideal() const;
  /// prod_j ((x_1..x_{n-1})^{[p^j]})^{gamma_j}, viewed in n variables.
  MonomialIdeal j_part() const;
  /// max{j : alpha_j > 0}; throws InapplicableError if alpha = 0.
  std::size_t top_digit() const;
  /// prod_{j<r} (m^{[p^j]})^{alpha_j} (m^{[p^r]})^{alpha_r - 1}.
  MonomialIdeal i_prime() const;
  /// J prod_j (m^{[p^j]})^{alpha_{aj}} with alpha_{aj} = alpha_j - a_j when
  /// alpha_j >= a_j and 0 otherwise.
  MonomialIdeal i_a(std::uint64_t a) const;
  /// Layers (j, gamma_j + alpha_{aj}) describing pi(I_a) in n - 1 variables.
  std::vector<CasLayer> pi_layers(std::uint64_t a) const;
  /// alpha_j + gamma_j < p for all j.
  bool digit_condition() const;
  std::string to_string() const;
};

/// Recognizes I as principal p-Borel with a generator in x_{n-1}, x_n only.
std::optional<TwoVariableShape> detect_shape(const MonomialIdeal& I, std::uint64_t p);

struct ColonDecompositionReport {
  TwoVariableShape shape;
  std::size_t r = 0;
  bool top_colon_holds = false;  // (I : x_n^{p^r}) = J I'
  std::vector<std::uint64_t> projection_failures;  // a with pi(I : x_n^a) != pi(I_a)
  bool ok() const { return top_colon_holds && projection_failures.empty(); }
};

/// Checks (I : x_n^{p^r}) = J I' and pi(I : x_n^a) = pi(I_a) for 0 <= a <= p^r.
ColonDecompositionReport colon_decomposition_check(const TwoVariableShape& shape);

struct LiftLayer {
  Exponent alpha = 0;  // the shape exponent of the ideal being decomposed
  std::uint64_t a = 0;
  MonomialIdeal ideal;  // (I : x_n^a)
  std::vector<std::vector<KoszulChain>> basis;  // indexed by homological degree
  /// Each projected basis element maps under eta to itself or to zero.
  bool eta_identity_or_zero = true;
};

struct LiftReport {
  TwoVariableShape shape;
  std::vector<LiftLayer> layers;  // in order of computation
  std::vector<std::vector<KoszulChain>> basis;  // basis of H_i(x; S/I), i = 0..n
  bool all_monomial = true;
};

/// Monomial cycle bases of H_i(x; S/I) for every i, built by descending
/// induction over (I : x_n^a). Every layer is checked with verify_basis;
/// a failure throws VerificationFailure naming the layer. Throws
/// InapplicableError if the digit condition fails.
LiftReport lift_monomial_basis(const TwoVariableShape& shape, const FieldSpec& field);

/// The basis of H_i for prod_t (m^{[p^{j_t}]})^{gamma_t} in num_vars
/// variables as chains over the given complex, including i = 0 and i = 1.
std::vector<KoszulChain> layered_basis_chains(const KoszulComplex& K, std::uint64_t p,
                                              const std::vector<CasLayer>& layers, std::size_t i);

struct ShiftIdentityReport {
  BettiTable over_s;     // beta^S(Sbar/Tbar)
  BettiTable over_sbar;  // beta^{Sbar}(Sbar/Tbar)
  bool holds = false;
};

/// beta^S_{ij}(Sbar/Tbar) = beta^{Sbar}_{ij} + beta^{Sbar}_{i-1,j-1} for an
/// ideal Tbar in n - 1 variables, both sides computed independently.
ShiftIdentityReport shift_identity_check(const MonomialIdeal& t_bar, const FieldSpec& field);

struct ConnectingMapReport {
  std::size_t i = 0;
  std::size_t image_delta = 0;   // dim Im delta_{i+1}
  std::size_t kernel_delta = 0;  // dim Ker delta_{i+1}
  std::size_t rank_eta = 0;      // dim Im eta_i
  std::size_t kernel_eta = 0;    // dim Ker eta_i
  std::size_t betti_bar_next = 0;  // dim H_{i+1}(x_1..x_{n-1}; Sbar/Tbar)
  bool holds = false;
};

/// For the sequence 0 -> S/(T:x_n)(-1) -> S/T -> Sbar/Tbar -> 0: the
/// connecting map's image has the dimension of Im eta_i, and its kernel that
/// of H_{i+1}(x_1..x_{n-1}; Sbar/Tbar) plus Ker eta_i. delta is computed as
/// the kernel of multiplication by x_n on homology, eta by class ranks.
std::vector<ConnectingMapReport> connecting_map_check(const MonomialIdeal& T,
                                                      const FieldSpec& field);

}  // namespace koszul

#endif
