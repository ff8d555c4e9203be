#include "koszul/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "koszul/error.hpp"

namespace koszul {

namespace {

void check_same_vars(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionMismatch("monomials in " + std::to_string(a.num_vars()) +
                            " and " + std::to_string(b.num_vars()) +
                            " variables");
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, Exponent power) {
  Monomial m(num_vars);
  m.set_exponent(var, power);
  return m;
}

Exponent Monomial::nu(std::size_t var) const {
  if (var < 1 || var > exps_.size()) {
    throw std::out_of_range("variable index " + std::to_string(var) +
                            " outside 1.." + std::to_string(exps_.size()));
  }
  return exps_[var - 1];
}

void Monomial::set_exponent(std::size_t var, Exponent e) {
  if (var < 1 || var > exps_.size()) {
    throw std::out_of_range("variable index " + std::to_string(var) +
                            " outside 1.." + std::to_string(exps_.size()));
  }
  exps_[var - 1] = e;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::optional<std::size_t> Monomial::max_index() const noexcept {
  for (std::size_t k = exps_.size(); k > 0; --k) {
    if (exps_[k - 1] != 0) return k;
  }
  return std::nullopt;
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < exps_.size() && k < 64; ++k) {
    if (exps_[k] != 0) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_vars(*this, other);
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same_vars(*this, other);
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    exps_[k] = checked_add(exps_[k], other.exps_[k]);
  }
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  check_same_vars(*this, other);
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (other.exps_[k] > exps_[k]) {
      throw std::domain_error(other.to_string() + " does not divide " + to_string());
    }
    r.exps_[k] -= other.exps_[k];
  }
  return r;
}

Monomial Monomial::frobenius(Exponent q) const {
  Monomial r = *this;
  for (auto& e : r.exps_) e = checked_mul(e, q);
  return r;
}

Monomial Monomial::pow(Exponent k) const { return frobenius(k); }

Monomial Monomial::times_var(std::size_t var) const {
  Monomial r = *this;
  r.set_exponent(var, checked_add(nu(var), 1));
  return r;
}

Monomial Monomial::div_var(std::size_t var) const {
  if (nu(var) == 0) {
    throw std::domain_error("x" + std::to_string(var) + " does not divide " + to_string());
  }
  Monomial r = *this;
  r.exps_[var - 1] -= 1;
  return r;
}

Monomial Monomial::truncated(std::size_t num_vars) const {
  if (num_vars > exps_.size()) throw std::invalid_argument("truncation widens monomial");
  return Monomial(std::vector<Exponent>(exps_.begin(), exps_.begin() + num_vars));
}

Monomial Monomial::extended(std::size_t num_vars) const {
  if (num_vars < exps_.size()) throw std::invalid_argument("extension narrows monomial");
  std::vector<Exponent> e = exps_;
  e.resize(num_vars, 0);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (k + 1);
    if (exps_[k] != 1) os << '^' << exps_[k];
  }
  if (first) return "1";
  return os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(a.exps()[k], b.exps()[k]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(a.exps()[k], b.exps()[k]);
  return Monomial(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::strong_ordering rlex_compare(const Monomial& a, const Monomial& b) {
  check_same_vars(a, b);
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da <=> db;
  const auto ea = a.exps();
  const auto eb = b.exps();
  for (std::size_t k = ea.size(); k > 0; --k) {
    if (ea[k - 1] != eb[k - 1]) {
      return ea[k - 1] < eb[k - 1] ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exps()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---- IndexSubset ------------------------------------------------------------

IndexSubset::IndexSubset(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) *this = with(i);
}

IndexSubset IndexSubset::from_indices(std::span<const std::size_t> indices) {
  IndexSubset s;
  for (auto i : indices) s = s.with(i);
  return s;
}

std::size_t IndexSubset::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

bool IndexSubset::contains(std::size_t index) const noexcept {
  return index >= 1 && index <= 64 && ((mask_ >> (index - 1)) & 1U);
}

std::optional<std::size_t> IndexSubset::max() const noexcept {
  if (mask_ == 0) return std::nullopt;
  return 64 - static_cast<std::size_t>(std::countl_zero(mask_));
}

std::vector<std::size_t> IndexSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  }
  return out;
}

IndexSubset IndexSubset::with(std::size_t index) const {
  if (index < 1 || index > 64) throw std::out_of_range("index outside 1..64");
  return IndexSubset(mask_ | (std::uint64_t{1} << (index - 1)));
}

IndexSubset IndexSubset::without(std::size_t index) const {
  if (index < 1 || index > 64) throw std::out_of_range("index outside 1..64");
  return IndexSubset(mask_ & ~(std::uint64_t{1} << (index - 1)));
}

std::size_t IndexSubset::rank_of(std::size_t index) const noexcept {
  if (index <= 1) return 0;
  const std::uint64_t below =
      index > 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (index - 1)) - 1);
  return static_cast<std::size_t>(std::popcount(mask_ & below));
}

Monomial IndexSubset::to_monomial(std::size_t num_vars) const {
  Monomial m(num_vars);
  for (auto i : indices()) m.set_exponent(i, 1);
  return m;
}

std::string IndexSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : indices()) {
    if (!first) os << ',';
    first = false;
    os << i;
  }
  os << '}';
  return os.str();
}

std::strong_ordering koszul_element_compare(const Monomial& u, const IndexSubset& sigma,
                                            const Monomial& v, const IndexSubset& tau) {
  check_same_vars(u, v);
  if (sigma.size() != tau.size()) {
    throw std::invalid_argument("Koszul elements of different homological degree");
  }
  const auto n = u.num_vars();
  if (auto c = rlex_compare(sigma.to_monomial(n), tau.to_monomial(n)); c != 0) return c;
  return rlex_compare(u, v);
}

// ---- p-adic -----------------------------------------------------------------

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t PAdicExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t j = digits.size(); j > 0; --j) v = v * p + digits[j - 1];
  return v;
}

PAdicExpansion p_adic(std::uint64_t a, std::uint64_t p) {
  require_prime(p);
  PAdicExpansion r{p, {}};
  while (a > 0) {
    r.digits.push_back(a % p);
    a /= p;
  }
  return r;
}

bool leq_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_prime(p);
  while (a > 0 || b > 0) {
    if (a % p > b % p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t p, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) throw std::overflow_error("power overflow");
  }
  return r;
}

}  // namespace koszul
