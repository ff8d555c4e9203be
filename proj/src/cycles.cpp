#include "koszul/cycles.hpp"

#include <numeric>
#include <string>

#include "koszul/error.hpp"

namespace koszul {

CycleCertificate certify(const KoszulComplex& K, KoszulChain input, KoszulChain representative,
                         KoszulChain witness) {
  CycleCertificate c{std::move(input), std::move(representative), std::move(witness)};
  if (!check_certificate(K, c)) {
    throw VerificationFailure("certificate identity fails: input - d(witness) != representative");
  }
  return c;
}

bool check_certificate(const KoszulComplex& K, const CycleCertificate& c) {
  if (c.witness.degree() != c.input.degree() + 1) return false;
  return c.input - K.boundary(c.witness) == c.representative;
}

void require_multigraded_cycle(const KoszulComplex& K, const KoszulChain& z) {
  if (!z.is_multigraded()) throw InapplicableError("chain is not multigraded");
  if (!K.is_cycle(z)) throw InapplicableError("chain is not a cycle");
}

bool has_neighbour(const KoszulComplex& K, const KoszulChain& z, std::size_t j) {
  require_multigraded_cycle(K, z);
  if (j >= z.length()) throw std::out_of_range("term index out of range");
  const auto& s = z.terms()[j].sigma;
  for (std::size_t k = 0; k < z.length(); ++k) {
    if (k == j) continue;
    const auto& t = z.terms()[k].sigma;
    if (IndexSubset(s.mask() & ~t.mask()).size() == 1 && t.size() == s.size()) return true;
  }
  return false;
}

bool is_normalized(const KoszulChain& z) {
  for (const auto& t : z.terms()) {
    const auto mu = t.u.max_index();
    if (mu && *mu > t.sigma.max().value_or(0)) return false;
  }
  return true;
}

namespace {

// Coefficient of u e_sigma in d(y) for y = v e_tau with tau = sigma + q.
Scalar boundary_coefficient(const KoszulComplex& K, const KoszulChain& dy, const Monomial& u,
                            const IndexSubset& sigma) {
  const Scalar c = dy.coefficient(u, sigma);
  if (K.field().is_zero(c)) throw VerificationFailure("expected term missing from a boundary");
  return c;
}

}  // namespace

NormalizedCycle normalize_cycle(const KoszulComplex& K, const KoszulChain& z) {
  require_multigraded_cycle(K, z);
  const auto& F = K.field();
  KoszulChain cur = z;
  KoszulChain witness = K.zero(z.degree() + 1);
  const std::size_t cap = 1'000'000;
  for (std::size_t step = 0;; ++step) {
    if (step > cap) throw VerificationFailure("normalization failed to terminate");
    const KoszulTerm* bad = nullptr;
    for (const auto& t : cur.terms()) {
      const auto mu = t.u.max_index();
      if (mu && *mu > t.sigma.max().value_or(0)) {
        bad = &t;
        break;
      }
    }
    if (bad == nullptr) break;
    const std::size_t q = *bad->u.max_index();
    const KoszulChain y = K.element(bad->u.div_var(q), bad->sigma.with(q));
    const KoszulChain dy = K.boundary(y);
    const Scalar f = F.div(bad->coeff, boundary_coefficient(K, dy, bad->u, bad->sigma));
    witness = witness + y.scaled(f);
    cur = cur - dy.scaled(f);
  }
  return {cur, witness};
}

H2Decomposition decompose_h2_monomial(const KoszulComplex& K, const KoszulChain& z) {
  if (z.degree() != 2) throw std::invalid_argument("expected a 2-cycle");
  require_multigraded_cycle(K, z);
  const auto& F = K.field();
  const auto& I = K.ideal();
  H2Decomposition out{{}, K.zero(3), 0};
  KoszulChain cur = z;
  const std::size_t cap = (z.length() + 1) * (K.num_vars() + 1) * 64;
  while (true) {
    auto nz = normalize_cycle(K, cur);
    out.witness = out.witness + nz.witness;
    cur = nz.cycle;
    if (cur.is_zero()) break;
    if (++out.steps > cap) throw VerificationFailure("2-cycle decomposition failed to terminate");

    const KoszulTerm lead = cur.leading();
    const auto idx = lead.sigma.indices();
    const std::size_t a = idx[0];
    const std::size_t r = idx[1];
    if (K.is_monomial_cycle(lead.u, lead.sigma)) {
      KoszulChain m = K.element(lead.u, lead.sigma, lead.coeff);
      out.monomial_cycles.push_back(m);
      cur = cur - m;
      continue;
    }
    if (!I.contains(lead.u.times_var(r))) {
      throw VerificationFailure("normalized 2-cycle has x_r u outside the ideal");
    }
    // x_a u is outside I, so the term x_a u e_r of d must cancel against a
    // term on {b, r}.
    std::optional<std::size_t> b;
    for (const auto& t : cur.terms()) {
      if (t.sigma.contains(r) && !t.sigma.contains(a)) {
        b = t.sigma.without(r).max();
        break;
      }
    }
    if (!b) throw VerificationFailure("leading term of a 2-cycle has no neighbour on e_r");
    const KoszulChain y = K.element(lead.u.div_var(*b), IndexSubset{a, *b, r});
    const KoszulChain dy = K.boundary(y);
    const Scalar f = F.div(lead.coeff, boundary_coefficient(K, dy, lead.u, lead.sigma));
    const KoszulChain D = dy.scaled(f);
    // The e_{ab} part of D is the companion; the rest replaces in(z).
    std::vector<KoszulTerm> side;
    for (const auto& t : D.terms()) {
      if (!t.sigma.contains(r)) side.push_back(t);
    }
    const KoszulChain phi = K.chain(2, side);
    for (const auto& t : phi.terms()) {
      if (!K.is_monomial_cycle(t.u, t.sigma)) {
        throw VerificationFailure("companion " + phi.to_string() + " is not a monomial cycle");
      }
    }
    out.witness = out.witness + y.scaled(f);
    cur = cur - D + phi;
    if (!phi.is_zero()) out.monomial_cycles.push_back(-phi);
  }
  KoszulChain sum = K.zero(2);
  for (const auto& m : out.monomial_cycles) sum = sum + m;
  certify(K, z, sum, out.witness);
  return out;
}

std::vector<std::vector<std::size_t>> top_degree_components(const KoszulComplex& K,
                                                            const Multidegree& a) {
  const std::size_t n = K.num_vars();
  const auto& I = K.ideal();
  const IndexSubset all(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  auto value = [&](const IndexSubset& s) -> std::optional<Monomial> {
    const Monomial xs = s.to_monomial(n);
    if (!xs.divides(a)) return std::nullopt;
    Monomial u = a / xs;
    if (I.contains(u)) return std::nullopt;
    return u;
  };
  std::vector<std::size_t> vertices;
  for (std::size_t k = 1; k <= n; ++k) {
    if (value(all.without(k))) vertices.push_back(k);
  }
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (value(all.without(vertices[i]).without(vertices[j]))) {
        parent[find(vertices[i])] = find(vertices[j]);
      }
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> root_of;
  for (auto k : vertices) {
    const auto r = find(k);
    std::size_t pos = 0;
    while (pos < root_of.size() && root_of[pos] != r) ++pos;
    if (pos == root_of.size()) {
      root_of.push_back(r);
      comps.emplace_back();
    }
    comps[pos].push_back(k);
  }
  return comps;
}

KoszulChain restrict_to_component(const KoszulComplex& K, const KoszulChain& z,
                                  const std::vector<std::size_t>& component) {
  std::vector<KoszulTerm> keep;
  for (const auto& t : z.terms()) {
    for (auto k : component) {
      if (!t.sigma.contains(k)) {
        keep.push_back(t);
        break;
      }
    }
  }
  return K.chain(z.degree(), keep);
}

TopDegreeReduction reduce_top_degree(const KoszulComplex& K, const KoszulChain& z) {
  const std::size_t n = K.num_vars();
  if (n < 2 || z.degree() != n - 1) throw std::invalid_argument("expected an (n-1)-cycle");
  require_multigraded_cycle(K, z);
  const auto& F = K.field();
  if (z.length() <= n / 2) return {z, K.zero(n)};

  const IndexSubset all((std::uint64_t{1} << n) - 1);
  auto missing = [&](const KoszulTerm& t) { return *IndexSubset(all.mask() & ~t.sigma.mask()).max(); };
  auto sign = [](std::size_t k) { return k % 2 == 1 ? Scalar(1) : Scalar(-1); };  // (-1)^{k+1}

  const auto& lead = z.leading();
  const std::size_t k1 = missing(lead);
  const Scalar c = F.mul(lead.coeff, sign(k1));
  for (const auto& t : z.terms()) {
    const std::size_t k = missing(t);
    if (!F.is_zero(F.sub(t.coeff, F.mul(c, sign(k))))) {
      throw InapplicableError("coefficients of " + z.to_string() +
                              " do not follow the sign pattern of d e_{1..n}; the cycle splits");
    }
  }
  const Monomial a = *z.multidegree();
  const Monomial top = all.to_monomial(n);
  if (!top.divides(a)) throw VerificationFailure("multi-term top-degree cycle below x_1...x_n");
  const KoszulChain w = K.element(a / top, all, c);
  const KoszulChain reduced = z - K.boundary(w);
  if (reduced.length() > n / 2) {
    throw VerificationFailure("top-degree reduction left " + std::to_string(reduced.length()) +
                              " terms");
  }
  certify(K, z, reduced, w);
  return {reduced, w};
}

}  // namespace koszul
