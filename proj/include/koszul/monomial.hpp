#ifndef KOSZUL_MONOMIAL_HPP
#define KOSZUL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace koszul {

using Exponent = std::uint32_t;

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as its exponent vector.
///
/// Variables are addressed 1-based through nu()/exponent(); exps() exposes
/// the raw 0-based vector. Arithmetic that would overflow Exponent throws
/// std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t num_vars) { return Monomial(num_vars); }
  /// x_var^power in num_vars variables (var is 1-based).
  static Monomial variable(std::size_t num_vars, std::size_t var,
                           Exponent power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::span<const Exponent> exps() const noexcept { return exps_; }

  /// Exponent of x_var (1-based). Throws std::out_of_range.
  Exponent nu(std::size_t var) const;
  Exponent exponent(std::size_t var) const { return nu(var); }
  void set_exponent(std::size_t var, Exponent e);

  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;

  /// Largest variable index with positive exponent; nullopt for 1.
  std::optional<std::size_t> max_index() const noexcept;
  /// Bitmask of variables (bit k-1 for x_k) with positive exponent.
  std::uint64_t support_mask() const noexcept;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exact quotient; throws std::domain_error when other does not divide *this.
  Monomial operator/(const Monomial& other) const;
  /// Every exponent multiplied by q (the Frobenius map x -> x^q).
  Monomial frobenius(Exponent q) const;
  Monomial pow(Exponent k) const;

  /// Copy with x_var's exponent increased (decreased) by one.
  Monomial times_var(std::size_t var) const;
  Monomial div_var(std::size_t var) const;

  /// Drop or append trailing variables.
  Monomial truncated(std::size_t num_vars) const;
  Monomial extended(std::size_t num_vars) const;

  bool operator==(const Monomial&) const = default;

  /// Renders as x1^3*x2, or 1 for the unit monomial.
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
/// Higher degree is greater; on equal degree the monomial whose last
/// nonzero exponent difference (a - b) is negative is greater.
std::strong_ordering rlex_compare(const Monomial& a, const Monomial& b);

/// Strict weak ordering placing rlex-greater monomials first.
struct RlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return rlex_compare(a, b) == std::strong_ordering::greater;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A set of variable indices in 1..64 stored as a bitmask.
class IndexSubset {
 public:
  IndexSubset() = default;
  explicit IndexSubset(std::uint64_t mask) : mask_(mask) {}
  IndexSubset(std::initializer_list<std::size_t> indices);
  static IndexSubset from_indices(std::span<const std::size_t> indices);

  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(std::size_t index) const noexcept;
  /// Largest element; nullopt when empty.
  std::optional<std::size_t> max() const noexcept;
  std::vector<std::size_t> indices() const;

  IndexSubset with(std::size_t index) const;
  IndexSubset without(std::size_t index) const;
  /// Number of elements of *this strictly smaller than index.
  std::size_t rank_of(std::size_t index) const noexcept;

  /// The squarefree monomial x_sigma in num_vars variables.
  Monomial to_monomial(std::size_t num_vars) const;

  bool operator==(const IndexSubset&) const = default;
  std::string to_string() const;

 private:
  std::uint64_t mask_ = 0;
};

/// Order on monomial Koszul elements u e_sigma of equal homological degree.
/// Elements are compared by x_sigma first and then by u, both in rlex.
/// Within a multidegree this places the element with the largest x_sigma
/// (equivalently the smallest u) first.
std::strong_ordering koszul_element_compare(const Monomial& u,
                                            const IndexSubset& sigma,
                                            const Monomial& v,
                                            const IndexSubset& tau);

// ---- p-adic arithmetic ----------------------------------------------------

bool is_prime(std::uint64_t p) noexcept;
/// Throws std::invalid_argument if p is not prime.
void require_prime(std::uint64_t p);

struct PAdicExpansion {
  std::uint64_t p = 2;
  /// Least significant digit first; empty for 0.
  std::vector<std::uint64_t> digits;

  std::uint64_t value() const;
  /// Digit j, zero beyond the stored length.
  std::uint64_t digit(std::size_t j) const noexcept {
    return j < digits.size() ? digits[j] : 0;
  }
};

PAdicExpansion p_adic(std::uint64_t a, std::uint64_t p);
/// a <=_p b: every p-adic digit of a is at most the matching digit of b.
bool leq_p(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// Checked integer power p^k.
std::uint64_t ipow(std::uint64_t p, std::uint64_t k);

}  // namespace koszul

template <>
struct std::hash<koszul::Monomial> : koszul::MonomialHash {};

#endif
