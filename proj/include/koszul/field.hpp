#ifndef KOSZUL_FIELD_HPP
#define KOSZUL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace koszul {

/// Field elements are carried as rationals; over GF(p) they are kept
/// normalized to an integer residue in [0, p).
using Scalar = mpq_class;

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "qq" or "gf:<p>" (case-insensitive).
  static FieldSpec parse(const std::string& text);

  FieldSpec() : FieldSpec(Kind::Rationals, 0) {}

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Image of a rational number in this field. Throws std::domain_error
  /// when the denominator vanishes mod p.
  Scalar normalize(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar div(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& x) const { return sgn(normalize(x)) == 0; }

  /// "QQ" or "GF(p)".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Residue of an integer-valued rational mod p as a machine word.
std::uint32_t to_residue(const Scalar& x, std::uint32_t p);

}  // namespace koszul

#endif
