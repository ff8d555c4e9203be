#include "koszul/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "koszul/monomial.hpp"

namespace koszul {

namespace {

std::uint32_t mod_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("field characteristic must be below 2^31");
  require_prime(p);
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "qq" || t == "q") return rationals();
  if (t.rfind("gf:", 0) == 0) {
    const auto digits = t.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
        digits.size() > 10) {
      throw std::invalid_argument("malformed field '" + text + "'");
    }
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected qq or gf:<p>)");
}

Scalar FieldSpec::normalize(const Scalar& x) const {
  if (kind_ == Kind::Rationals) return x;
  const std::uint64_t num = mod_of(x.get_num(), p_);
  const std::uint64_t den = mod_of(x.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator vanishes in " + name());
  return Scalar(static_cast<unsigned long>(num * inverse_mod(den, p_) % p_));
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) throw std::domain_error("division by zero");
  if (kind_ == Kind::Rationals) return a / b;
  const std::uint64_t inv = inverse_mod(to_residue(normalize(b), p_), p_);
  return mul(a, Scalar(static_cast<unsigned long>(inv)));
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::Rationals) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

std::uint32_t to_residue(const Scalar& x, std::uint32_t p) {
  if (x.get_den() != 1) {
    const std::uint64_t den = mod_of(x.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    return static_cast<std::uint32_t>(mod_of(x.get_num(), p) * inverse_mod(den, p) % p);
  }
  return mod_of(x.get_num(), p);
}

}  // namespace koszul
