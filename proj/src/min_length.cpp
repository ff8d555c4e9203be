#include "koszul/min_length.hpp"

#include <stdexcept>

#include "koszul/betti.hpp"
#include "koszul/error.hpp"

namespace koszul {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneUpToBound: return "none up to bound";
    case SearchStatus::BoundExceeded: return "aborted, bound exceeded";
  }
  return "?";
}

namespace {

// Coordinates on K_i(a) / B_i(a) via a basis of functionals vanishing on
// the boundaries.
class Quotient {
 public:
  explicit Quotient(const Strand& s) : field_(s.complex().field()) {
    const auto& bv = s.boundary_vectors();
    SparseMatrix m(bv.size(), s.dimension());
    for (std::size_t r = 0; r < bv.size(); ++r) {
      for (std::size_t c = 0; c < bv[r].size(); ++c) {
        if (sgn(bv[r][c]) != 0) m.append(r, c, bv[r][c]);
      }
    }
    functionals_ = kernel_basis(m, field_);
  }

  std::size_t dim() const { return functionals_.size(); }

  Vector operator()(const Vector& v) const {
    Vector out(functionals_.size(), Scalar(0));
    for (std::size_t k = 0; k < functionals_.size(); ++k) {
      Scalar acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(v[j]) != 0 && sgn(functionals_[k][j]) != 0) acc += v[j] * functionals_[k][j];
      }
      out[k] = field_.normalize(acc);
    }
    return out;
  }

  Vector unit_image(std::size_t j, std::size_t d) const {
    Vector e(d, Scalar(0));
    e[j] = 1;
    return (*this)(e);
  }

 private:
  FieldSpec field_;
  std::vector<Vector> functionals_;
};

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

// Calls f on each increasing k-subset of pool until it returns true.
template <class F>
bool for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, F&& f) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<std::size_t> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[pos[i]];
    if (f(subset)) return true;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool within_caps(std::size_t dimension, std::size_t k_max) {
  if (k_max == 0) throw std::invalid_argument("k_max must be at least 1");
  return dimension <= kMaxSearchDimension && k_max <= kMaxSearchLength;
}

}  // namespace

StrandSearchReport search_min_length_strand(const KoszulComplex& K, std::size_t i,
                                            const Multidegree& a, std::size_t k_max) {
  const Strand s(K, i, a);
  StrandSearchReport rep;
  rep.a = a;
  rep.degree = i;
  rep.dimension = s.dimension();
  rep.betti = s.betti();
  if (rep.betti == 0) {
    rep.min_length = 0;
    return rep;
  }
  if (!within_caps(rep.dimension, k_max)) {
    rep.status = SearchStatus::BoundExceeded;
    return rep;
  }
  const auto& F = K.field();
  const Quotient pi(s);
  const std::size_t d = s.dimension();
  std::vector<std::size_t> pool;
  for (std::size_t j = 0; j < d; ++j) {
    if (!is_zero_vector(pi.unit_image(j, d))) pool.push_back(j);
  }
  IncrementalBasis classes(pi.dim(), F);
  const auto& dl = s.lower_differential();
  std::vector<Vector> columns(d);
  for (std::size_t j = 0; j < d; ++j) columns[j] = dl.column(j);

  for (std::size_t k = 1; k <= k_max; ++k) {
    const bool done = for_each_subset(pool, k, [&](const std::vector<std::size_t>& T) {
      SparseMatrix m(dl.rows(), T.size());
      for (std::size_t c = 0; c < T.size(); ++c) {
        for (std::size_t r = 0; r < dl.rows(); ++r) {
          if (sgn(columns[T[c]][r]) != 0) m.append(r, c, columns[T[c]][r]);
        }
      }
      for (const auto& kv : kernel_basis(m, F)) {
        Vector full(d, Scalar(0));
        for (std::size_t c = 0; c < T.size(); ++c) full[T[c]] = kv[c];
        if (classes.add(pi(full))) rep.witnesses.push_back(s.chain_from(full));
      }
      return classes.rank() == rep.betti;
    });
    if (done) {
      rep.min_length = k;
      return rep;
    }
  }
  rep.status = SearchStatus::NoneUpToBound;
  return rep;
}

std::vector<StrandSearchReport> search_min_length_basis(const MonomialIdeal& I, std::size_t i,
                                                        const FieldSpec& field,
                                                        std::size_t k_max) {
  const KoszulComplex K(I, field);
  std::vector<StrandSearchReport> out;
  for (const auto& a : candidate_multidegrees(I, i)) {
    if (multidegree_betti(I, a, field)[i] == 0) continue;
    out.push_back(search_min_length_strand(K, i, a, k_max));
  }
  return out;
}

ClassLengthReport min_class_length(const KoszulComplex& K, const KoszulChain& z,
                                   std::size_t k_max) {
  if (!K.is_cycle(z)) throw InapplicableError("chain is not a cycle");
  ClassLengthReport rep;
  if (z.is_zero()) {
    rep.length = 0;
    rep.witness = z;
    return rep;
  }
  const auto a = z.multidegree();
  if (!a) throw InapplicableError("chain is not multigraded");
  const Strand s(K, z.degree(), *a);
  rep.dimension = s.dimension();
  if (!within_caps(rep.dimension, k_max)) {
    rep.status = SearchStatus::BoundExceeded;
    return rep;
  }
  const auto& F = K.field();
  const Quotient pi(s);
  const std::size_t d = s.dimension();
  const Vector target = pi(s.coordinates(z));
  if (is_zero_vector(target)) {
    rep.length = 0;
    rep.witness = K.zero(z.degree());
    return rep;
  }
  std::vector<std::size_t> pool;
  std::vector<Vector> images(d);
  for (std::size_t j = 0; j < d; ++j) {
    images[j] = pi.unit_image(j, d);
    if (!is_zero_vector(images[j])) pool.push_back(j);
  }
  for (std::size_t k = 1; k <= k_max; ++k) {
    const bool found = for_each_subset(pool, k, [&](const std::vector<std::size_t>& T) {
      ++rep.supports_checked;
      SparseMatrix m(pi.dim(), T.size());
      for (std::size_t c = 0; c < T.size(); ++c) {
        for (std::size_t r = 0; r < pi.dim(); ++r) {
          if (sgn(images[T[c]][r]) != 0) m.append(r, c, images[T[c]][r]);
        }
      }
      const auto x = solve(m, target, F);
      if (!x) return false;
      Vector full(d, Scalar(0));
      for (std::size_t c = 0; c < T.size(); ++c) full[T[c]] = (*x)[c];
      KoszulChain y = s.chain_from(full);
      if (y.length() != k || !s.same_class(y, z)) {
        throw VerificationFailure("class-length search produced an inconsistent witness");
      }
      rep.witness = std::move(y);
      return true;
    });
    if (found) {
      rep.length = k;
      return rep;
    }
  }
  rep.status = SearchStatus::NoneUpToBound;
  return rep;
}

}  // namespace koszul
