#include "koszul/koszul_complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "koszul/error.hpp"

namespace koszul {

namespace {

bool term_greater(const KoszulTerm& a, const KoszulTerm& b) {
  return koszul_element_compare(a.u, a.sigma, b.u, b.sigma) == std::strong_ordering::greater;
}

bool same_element(const KoszulTerm& a, const KoszulTerm& b) {
  return a.sigma == b.sigma && a.u == b.u;
}

bool element_greater(const std::pair<Monomial, IndexSubset>& a,
                     const std::pair<Monomial, IndexSubset>& b) {
  return koszul_element_compare(a.first, a.second, b.first, b.second) ==
         std::strong_ordering::greater;
}

void check_compatible(const KoszulChain& a, const KoszulChain& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionMismatch("chains in different rings");
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("chains of different homological degree");
  }
  if (!(a.field() == b.field())) throw std::invalid_argument("chains over different fields");
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  Scalar mag = abs(c);
  std::string out;
  if (first) {
    out = sgn(c) < 0 ? "-" : "";
  } else {
    out = sgn(c) < 0 ? " - " : " + ";
  }
  if (mag != 1) out += mag.get_str() + " ";
  return out;
}

}  // namespace

// ---- KoszulChain ------------------------------------------------------------

void KoszulChain::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<KoszulTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && same_element(merged.back(), t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    t.coeff = field_.normalize(t.coeff);
    if (sgn(t.coeff) != 0) terms_.push_back(std::move(t));
  }
}

const KoszulTerm& KoszulChain::leading() const {
  if (terms_.empty()) throw std::logic_error("the zero chain has no leading term");
  return terms_.front();
}

std::optional<Multidegree> KoszulChain::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  const Multidegree a = terms_.front().u * terms_.front().sigma.to_monomial(n_);
  for (const auto& t : terms_) {
    if (t.u * t.sigma.to_monomial(n_) != a) return std::nullopt;
  }
  return a;
}

bool KoszulChain::is_multigraded() const { return terms_.empty() || multidegree().has_value(); }

Scalar KoszulChain::coefficient(const Monomial& u, const IndexSubset& sigma) const {
  for (const auto& t : terms_) {
    if (t.sigma == sigma && t.u == u) return t.coeff;
  }
  return Scalar(0);
}

KoszulChain KoszulChain::operator+(const KoszulChain& other) const {
  check_compatible(*this, other);
  KoszulChain r = *this;
  r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
  r.canonicalize();
  return r;
}

KoszulChain KoszulChain::operator-(const KoszulChain& other) const { return *this + (-other); }

KoszulChain KoszulChain::operator-() const { return scaled(Scalar(-1)); }

KoszulChain KoszulChain::scaled(const Scalar& c) const {
  KoszulChain r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  r.canonicalize();
  return r;
}

bool KoszulChain::operator==(const KoszulChain& other) const {
  if (n_ != other.n_ || degree_ != other.degree_ || terms_.size() != other.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& a = terms_[k];
    const auto& b = other.terms_[k];
    if (!same_element(a, b) || a.coeff != b.coeff) return false;
  }
  return true;
}

std::string KoszulChain::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    os << coefficient_prefix(t.coeff, first);
    first = false;
    if (!t.u.is_unit()) os << t.u << ' ';
    os << 'e' << t.sigma.to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KoszulChain& z) { return os << z.to_string(); }

// ---- KoszulComplex ----------------------------------------------------------

KoszulComplex::KoszulComplex(MonomialIdeal ideal, FieldSpec field)
    : ideal_(std::move(ideal)), field_(field) {
  if (ideal_.num_vars() > 64) throw std::invalid_argument("at most 64 variables are supported");
}

void KoszulComplex::check_chain(const KoszulChain& z) const {
  if (z.num_vars() != num_vars()) throw DimensionMismatch("chain from a different ring");
  if (!(z.field() == field_)) throw std::invalid_argument("chain over a different field");
}

KoszulChain KoszulComplex::chain(std::size_t i, std::vector<KoszulTerm> terms) const {
  KoszulChain z(num_vars(), i, field_);
  const std::uint64_t allowed =
      num_vars() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << num_vars()) - 1);
  for (auto& t : terms) {
    if (t.u.num_vars() != num_vars()) throw DimensionMismatch("term from a different ring");
    if (t.sigma.size() != i) {
      throw std::invalid_argument("term e" + t.sigma.to_string() + " is not of degree " +
                                  std::to_string(i));
    }
    if ((t.sigma.mask() & ~allowed) != 0) {
      throw std::invalid_argument("index subset " + t.sigma.to_string() + " exceeds n");
    }
    if (ideal_.contains(t.u)) continue;
    z.terms_.push_back(std::move(t));
  }
  z.canonicalize();
  return z;
}

KoszulChain KoszulComplex::element(const Monomial& u, const IndexSubset& sigma,
                                   const Scalar& coeff) const {
  return chain(sigma.size(), {{coeff, u, sigma}});
}

KoszulChain KoszulComplex::zero(std::size_t i) const { return KoszulChain(num_vars(), i, field_); }

KoszulChain KoszulComplex::boundary(const KoszulChain& z) const {
  check_chain(z);
  if (z.degree() == 0) return zero(0);
  std::vector<KoszulTerm> out;
  for (const auto& t : z.terms()) {
    const auto idx = t.sigma.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Monomial v = t.u.times_var(idx[k]);
      if (ideal_.contains(v)) continue;
      Scalar c = (k % 2 == 0) ? t.coeff : Scalar(-t.coeff);
      out.push_back({c, std::move(v), t.sigma.without(idx[k])});
    }
  }
  KoszulChain r(num_vars(), z.degree() - 1, field_);
  r.terms_ = std::move(out);
  r.canonicalize();
  return r;
}

bool KoszulComplex::is_cycle(const KoszulChain& z) const { return boundary(z).is_zero(); }

KoszulChain KoszulComplex::multiply(const KoszulChain& z, const Monomial& v) const {
  check_chain(z);
  std::vector<KoszulTerm> terms;
  for (const auto& t : z.terms()) terms.push_back({t.coeff, t.u * v, t.sigma});
  return chain(z.degree(), std::move(terms));
}

int wedge_sign(const IndexSubset& sigma, std::size_t k) {
  const std::uint64_t above = k >= 64 ? 0 : (sigma.mask() >> k);
  return std::popcount(above) % 2 == 0 ? 1 : -1;
}

KoszulChain KoszulComplex::wedge(const KoszulChain& z, std::size_t k) const {
  check_chain(z);
  if (k < 1 || k > num_vars()) throw std::out_of_range("wedge index outside 1..n");
  std::vector<KoszulTerm> terms;
  for (const auto& t : z.terms()) {
    if (t.sigma.contains(k)) continue;
    terms.push_back({t.coeff * wedge_sign(t.sigma, k), t.u, t.sigma.with(k)});
  }
  return chain(z.degree() + 1, std::move(terms));
}

bool KoszulComplex::is_monomial_cycle(const Monomial& u, const IndexSubset& sigma) const {
  if (ideal_.contains(u)) {
    throw InapplicableError(u.to_string() + " lies in the ideal, so the element is zero");
  }
  for (auto t : sigma.indices()) {
    if (!ideal_.contains(u.times_var(t))) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, IndexSubset>> strand_elements(const MonomialIdeal& I,
                                                              std::size_t i,
                                                              const Multidegree& a) {
  std::vector<std::pair<Monomial, IndexSubset>> out;
  const auto support = IndexSubset(a.support_mask()).indices();
  if (i > support.size()) return out;
  if (i == 0) {
    if (!I.contains(a)) out.emplace_back(a, IndexSubset{});
    return out;
  }
  // Enumerate i-subsets of the support by bitmask over support positions.
  const std::size_t s = support.size();
  for (std::uint64_t pick = (std::uint64_t{1} << i) - 1; pick < (std::uint64_t{1} << s);) {
    IndexSubset sigma;
    for (std::size_t k = 0; k < s; ++k) {
      if ((pick >> k) & 1U) sigma = sigma.with(support[k]);
    }
    Monomial u = a / sigma.to_monomial(a.num_vars());
    if (!I.contains(u)) out.emplace_back(std::move(u), sigma);
    // Gosper's hack: next subset with the same popcount.
    const std::uint64_t c = pick & (~pick + 1);
    const std::uint64_t r = pick + c;
    pick = (((r ^ pick) >> 2) / c) | r;
  }
  return out;
}

std::vector<std::pair<Monomial, IndexSubset>> KoszulComplex::strand_basis(
    std::size_t i, const Multidegree& a) const {
  if (a.num_vars() != num_vars()) throw DimensionMismatch("multidegree from a different ring");
  auto out = strand_elements(ideal_, i, a);
  std::sort(out.begin(), out.end(), element_greater);
  return out;
}

// ---- Strand -----------------------------------------------------------------

SparseMatrix strand_differential(const std::vector<std::pair<Monomial, IndexSubset>>& source,
                                 const std::vector<std::pair<Monomial, IndexSubset>>& target) {
  std::unordered_map<std::uint64_t, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r].second.mask(), r);
  SparseMatrix d(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& [u, sigma] = source[c];
    const auto idx = sigma.indices();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto it = row_of.find(sigma.without(idx[k]).mask());
      // Missing rows are exactly the terms x_{j_k} u in I.
      if (it == row_of.end()) continue;
      d.append(it->second, c, Scalar(k % 2 == 0 ? 1 : -1));
    }
  }
  return d;
}

Strand::Strand(const KoszulComplex& complex, std::size_t i, Multidegree a)
    : complex_(complex), i_(i), a_(std::move(a)) {
  basis_ = complex_.strand_basis(i_, a_);
  if (i_ > 0) lower_basis_ = complex_.strand_basis(i_ - 1, a_);
  upper_basis_ = complex_.strand_basis(i_ + 1, a_);
  d_lower_ = strand_differential(basis_, lower_basis_);
  d_upper_ = strand_differential(upper_basis_, basis_);
}

Vector Strand::coordinates(const KoszulChain& z) const {
  if (z.degree() != i_) throw std::invalid_argument("chain has the wrong homological degree");
  Vector v(basis_.size(), Scalar(0));
  for (const auto& t : z.terms()) {
    auto it = std::find_if(basis_.begin(), basis_.end(), [&](const auto& e) {
      return e.second == t.sigma && e.first == t.u;
    });
    if (it == basis_.end()) {
      throw std::invalid_argument("term " + t.u.to_string() + " e" + t.sigma.to_string() +
                                  " is not in the strand of " + a_.to_string());
    }
    v[static_cast<std::size_t>(it - basis_.begin())] = t.coeff;
  }
  return v;
}

KoszulChain Strand::chain_from(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("coordinate vector length");
  std::vector<KoszulTerm> terms;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) != 0) terms.push_back({coords[k], basis_[k].first, basis_[k].second});
  }
  return complex_.chain(i_, std::move(terms));
}

std::vector<KoszulChain> Strand::cycle_basis() const {
  std::vector<KoszulChain> out;
  for (const auto& v : kernel_basis(d_lower_, complex_.field())) out.push_back(chain_from(v));
  return out;
}

const std::vector<Vector>& Strand::boundary_vectors() const {
  if (!boundary_vectors_) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < d_upper_.cols(); ++c) {
      Vector v = d_upper_.column(c);
      for (auto& x : v) x = complex_.field().normalize(x);
      cols.push_back(std::move(v));
    }
    boundary_vectors_ = std::move(cols);
  }
  return *boundary_vectors_;
}

const IncrementalBasis& Strand::boundary_span() const {
  if (!boundary_span_) {
    IncrementalBasis span(basis_.size(), complex_.field(), true);
    const auto& cols = boundary_vectors();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (span.add(cols[c])) boundary_columns_.push_back(c);
    }
    boundary_span_ = std::move(span);
  }
  return *boundary_span_;
}

std::vector<KoszulChain> Strand::boundary_basis() const {
  boundary_span();
  std::vector<KoszulChain> out;
  for (auto c : boundary_columns_) out.push_back(chain_from(boundary_vectors()[c]));
  return out;
}

std::size_t Strand::cycle_dimension() const {
  return basis_.size() - rank(d_lower_, complex_.field());
}

std::size_t Strand::boundary_dimension() const { return boundary_span().rank(); }

std::size_t Strand::betti() const { return cycle_dimension() - boundary_dimension(); }

std::vector<KoszulChain> Strand::homology_representatives() const {
  const auto cycles = kernel_basis(d_lower_, complex_.field());
  const auto reps =
      quotient_representatives(cycles, boundary_vectors(), basis_.size(), complex_.field());
  std::vector<KoszulChain> out;
  for (const auto& v : reps) out.push_back(chain_from(v));
  return out;
}

bool Strand::in_boundary(const KoszulChain& z) const {
  return boundary_span().contains(coordinates(z));
}

bool Strand::same_class(const KoszulChain& z, const KoszulChain& w) const {
  return in_boundary(z - w);
}

std::size_t Strand::class_rank(const std::vector<KoszulChain>& chains) const {
  IncrementalBasis span = boundary_span();
  const auto base = span.rank();
  for (const auto& z : chains) span.add(coordinates(z));
  return span.rank() - base;
}

std::optional<KoszulChain> Strand::boundary_preimage(const KoszulChain& z) const {
  const auto coeffs = boundary_span().express(coordinates(z));
  if (!coeffs) return std::nullopt;
  std::vector<KoszulTerm> terms;
  for (std::size_t k = 0; k < coeffs->size(); ++k) {
    if (sgn((*coeffs)[k]) == 0) continue;
    const auto& e = upper_basis_[boundary_columns_[k]];
    terms.push_back({(*coeffs)[k], e.first, e.second});
  }
  return complex_.chain(i_ + 1, std::move(terms));
}

}  // namespace koszul
