#include "koszul/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "koszul/error.hpp"

namespace koszul {

namespace {

void check_vars(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.num_vars() != J.num_vars()) {
    throw DimensionMismatch("ideals in " + std::to_string(I.num_vars()) + " and " +
                            std::to_string(J.num_vars()) + " variables");
  }
}

void check_vars(const MonomialIdeal& I, const Monomial& u) {
  if (I.num_vars() != u.num_vars()) {
    throw DimensionMismatch("monomial in " + std::to_string(u.num_vars()) +
                            " variables against ideal in " +
                            std::to_string(I.num_vars()));
  }
}

void check_index(const MonomialIdeal& I, std::size_t j) {
  if (j < 1 || j > I.num_vars()) {
    throw std::out_of_range("variable index " + std::to_string(j) + " outside 1.." +
                            std::to_string(I.num_vars()));
  }
}

}  // namespace

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return rlex_compare(a, b) == std::strong_ordering::greater;
}

MonomialIdeal minimalize(std::size_t num_vars, std::vector<Monomial> gens) {
  return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : n_(num_vars) {
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) {
      throw DimensionMismatch("generator " + g.to_string() + " has " +
                              std::to_string(g.num_vars()) + " variables, expected " +
                              std::to_string(num_vars));
    }
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Sorted by degree, so a divisor of g always precedes it.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens_) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t num_vars) {
  return MonomialIdeal(num_vars, {Monomial(num_vars)});
}

MonomialIdeal MonomialIdeal::prefix(std::size_t num_vars, std::size_t q) {
  if (q > num_vars) throw std::out_of_range("prefix length exceeds variable count");
  std::vector<Monomial> g;
  for (std::size_t k = 1; k <= q; ++k) g.push_back(Monomial::variable(num_vars, k));
  return MonomialIdeal(num_vars, std::move(g));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& u) const {
  check_vars(*this, u);
  for (const auto& g : gens_) {
    if (g.divides(u)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_vars(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Monomial& g) { return contains(g); });
}

std::optional<std::size_t> MonomialIdeal::max_index() const noexcept {
  std::optional<std::size_t> m;
  for (const auto& g : gens_) {
    auto k = g.max_index();
    if (k && (!m || *k > *m)) m = k;
  }
  return m;
}

std::uint64_t MonomialIdeal::max_generator_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Monomial MonomialIdeal::generator_lcm() const {
  Monomial l(n_);
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) os << ", ";
    os << gens_[k];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  return os << I.to_string();
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_vars(I, J);
  std::vector<Monomial> g;
  g.reserve(I.size() * J.size());
  for (const auto& a : I.gens()) {
    for (const auto& b : J.gens()) g.push_back(a * b);
  }
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& I, std::size_t k) {
  MonomialIdeal r = MonomialIdeal::unit(I.num_vars());
  for (std::size_t i = 0; i < k; ++i) r = product(r, I);
  return r;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_vars(I, J);
  std::vector<Monomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_vars(I, J);
  std::vector<Monomial> g;
  g.reserve(I.size() * J.size());
  for (const auto& a : I.gens()) {
    for (const auto& b : J.gens()) g.push_back(lcm(a, b));
  }
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal frobenius_power(const MonomialIdeal& I, Exponent q) {
  if (q < 1) throw std::invalid_argument("Frobenius exponent must be positive");
  std::vector<Monomial> g;
  for (const auto& a : I.gens()) g.push_back(a.frobenius(q));
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& v) {
  check_vars(I, v);
  std::vector<Monomial> g;
  for (const auto& a : I.gens()) g.push_back(a / gcd(a, v));
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_vars(I, J);
  if (J.is_zero()) return MonomialIdeal::unit(I.num_vars());
  MonomialIdeal r = colon_monomial(I, J.gens().front());
  for (std::size_t k = 1; k < J.size(); ++k) {
    r = intersection(r, colon_monomial(I, J.gens()[k]));
  }
  return r;
}

MonomialIdeal colon_var_saturate(const MonomialIdeal& I, std::size_t j) {
  check_index(I, j);
  std::vector<Monomial> g;
  for (auto a : I.gens()) {
    a.set_exponent(j, 0);
    g.push_back(std::move(a));
  }
  return MonomialIdeal(I.num_vars(), std::move(g));
}

MonomialIdeal saturation_wrt_prefix(const MonomialIdeal& I, std::size_t j) {
  check_index(I, j);
  const MonomialIdeal m = MonomialIdeal::prefix(I.num_vars(), j);
  MonomialIdeal cur = I;
  while (true) {
    MonomialIdeal next = colon_ideal(cur, m);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MonomialIdeal saturation(const MonomialIdeal& I) {
  return saturation_wrt_prefix(I, I.num_vars());
}

MonomialIdeal restrict_to_prefix(const MonomialIdeal& I, std::size_t k) {
  if (k > I.num_vars()) throw std::out_of_range("prefix exceeds variable count");
  std::vector<Monomial> g;
  for (const auto& a : I.gens()) {
    auto m = a.max_index();
    if (!m || *m <= k) g.push_back(a.truncated(k));
  }
  return MonomialIdeal(k, std::move(g));
}

MonomialIdeal pi_drop_last_var(const MonomialIdeal& I) {
  if (I.num_vars() < 2) {
    throw InapplicableError("cannot drop the last variable of a ring in one variable");
  }
  return restrict_to_prefix(I, I.num_vars() - 1);
}

MonomialIdeal extend_vars(const MonomialIdeal& I, std::size_t num_vars) {
  std::vector<Monomial> g;
  for (const auto& a : I.gens()) g.push_back(a.extended(num_vars));
  return MonomialIdeal(num_vars, std::move(g));
}

bool is_p_borel(const MonomialIdeal& I, std::uint64_t p) {
  require_prime(p);
  const auto n = I.num_vars();
  for (const auto& u : I.gens()) {
    for (std::size_t i = 2; i <= n; ++i) {
      const Exponent e = u.nu(i);
      for (Exponent t = 1; t <= e; ++t) {
        if (!leq_p(t, e, p)) continue;
        for (std::size_t j = 1; j < i; ++j) {
          Monomial v = u;
          v.set_exponent(i, e - t);
          v.set_exponent(j, v.nu(j) + t);
          if (!I.contains(v)) return false;
        }
      }
    }
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& I) {
  const auto n = I.num_vars();
  for (const auto& u : I.gens()) {
    for (std::size_t i = 2; i <= n; ++i) {
      if (u.nu(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j) {
        if (!I.contains(u.div_var(i).times_var(j))) return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> borel_type_failure(const MonomialIdeal& I) {
  for (std::size_t j = 1; j <= I.num_vars(); ++j) {
    if (colon_var_saturate(I, j) != saturation_wrt_prefix(I, j)) return j;
  }
  return std::nullopt;
}

bool is_borel_type(const MonomialIdeal& I) { return !borel_type_failure(I).has_value(); }

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint64_t d) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> e(num_vars, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t left) {
    if (k + 1 == num_vars) {
      e[k] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t x = left + 1; x-- > 0;) {
      e[k] = static_cast<Exponent>(x);
      rec(k + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

std::size_t count_difference_in_degree(const MonomialIdeal& J, const MonomialIdeal& I,
                                       std::uint64_t d) {
  check_vars(I, J);
  std::size_t count = 0;
  for (const auto& u : monomials_of_degree(J.num_vars(), d)) {
    if (J.contains(u) && !I.contains(u)) ++count;
  }
  return count;
}

}  // namespace koszul
