#ifndef KOSZUL_IDEAL_HPP
#define KOSZUL_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/monomial.hpp"

namespace koszul {

/// Canonical generator order: degree ascending, then rlex descending.
bool canonical_less(const Monomial& a, const Monomial& b);

/// A monomial ideal in K[x_1..x_n], stored by its minimal generators G(I).
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes gens. Throws DimensionMismatch on mixed variable counts.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t num_vars) { return MonomialIdeal(num_vars, {}); }
  static MonomialIdeal unit(std::size_t num_vars);
  /// (x_1, ..., x_q) in num_vars variables; q defaults to num_vars.
  static MonomialIdeal prefix(std::size_t num_vars, std::size_t q);
  static MonomialIdeal maximal(std::size_t num_vars) { return prefix(num_vars, num_vars); }

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool contains(const Monomial& u) const;
  bool contains(const MonomialIdeal& other) const;

  /// m(I) = max m(u) over G(I); nullopt for the zero and unit ideals.
  std::optional<std::size_t> max_index() const noexcept;
  std::uint64_t max_generator_degree() const noexcept;
  /// lcm of all generators (the unit monomial for the zero ideal).
  Monomial generator_lcm() const;

  bool operator==(const MonomialIdeal&) const = default;

  /// Canonical text, e.g. (x1^2, x1*x2, x2^2); zero ideal renders as ().
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, std::size_t k);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal frobenius_power(const MonomialIdeal& I, Exponent q);

/// (I : v), generated by g / gcd(g, v).
MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& v);
/// (I : J) for a monomial ideal J, the intersection of (I : g) over g in G(J).
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : x_j^inf): zero the j-th exponent of every generator.
MonomialIdeal colon_var_saturate(const MonomialIdeal& I, std::size_t j);
/// (I : (x_1..x_j)^inf) by iterated colon until stable.
MonomialIdeal saturation_wrt_prefix(const MonomialIdeal& I, std::size_t j);
MonomialIdeal saturation(const MonomialIdeal& I);

/// The ideal generated by the generators of I lying in K[x_1..x_k], viewed
/// as an ideal of K[x_1..x_k].
MonomialIdeal restrict_to_prefix(const MonomialIdeal& I, std::size_t k);
/// Image of I under x_n -> 0, an ideal in n - 1 variables.
MonomialIdeal pi_drop_last_var(const MonomialIdeal& I);
/// The same generators viewed in num_vars >= n variables.
MonomialIdeal extend_vars(const MonomialIdeal& I, std::size_t num_vars);

bool is_p_borel(const MonomialIdeal& I, std::uint64_t p);
bool is_strongly_stable(const MonomialIdeal& I);
/// First index j with (I : x_j^inf) != (I : (x_1..x_j)^inf), or nullopt.
std::optional<std::size_t> borel_type_failure(const MonomialIdeal& I);
bool is_borel_type(const MonomialIdeal& I);

/// All monomials of total degree d in num_vars variables, lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint64_t d);
/// Monomials of degree d in J but not in I.
std::size_t count_difference_in_degree(const MonomialIdeal& J, const MonomialIdeal& I,
                                       std::uint64_t d);

}  // namespace koszul

#endif
