#include "koszul/h3_reduction.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "koszul/error.hpp"
#include "koszul/pborel.hpp"

namespace koszul {

namespace {

struct Element {
  Monomial u;
  IndexSubset sigma;
};

struct Move {
  KoszulChain y;
  KoszulChain phi;      // lambda * phi
  KoszulChain witness;  // sum c_k w_k
};

// Coefficients lambda, c_k making y = lambda phi + sum c_k d(w_k) have
// in(y) = 1 * E. Returns nullopt if impossible or if y is too long.
std::optional<Move> solve_move(const KoszulComplex& K, const KoszulTerm& E, const KoszulChain& phi,
                               const std::vector<KoszulChain>& ws) {
  const auto& F = K.field();
  std::vector<KoszulChain> cols;
  if (!phi.is_zero()) cols.push_back(phi);
  for (const auto& w : ws) cols.push_back(K.boundary(w));
  if (cols.empty()) return std::nullopt;

  std::vector<Element> rows{{E.u, E.sigma}};
  for (const auto& col : cols) {
    for (const auto& t : col.terms()) {
      if (koszul_element_compare(t.u, t.sigma, E.u, E.sigma) <= 0) continue;
      bool seen = false;
      for (const auto& r : rows) seen = seen || (r.u == t.u && r.sigma == t.sigma);
      if (!seen) rows.push_back({t.u, t.sigma});
    }
  }
  SparseMatrix M(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar c = cols[j].coefficient(rows[i].u, rows[i].sigma);
      if (sgn(c) != 0) M.set(i, j, c);
    }
  }
  Vector b(rows.size(), Scalar(0));
  b[0] = 1;
  const auto x = solve(M, b, F);
  if (!x) return std::nullopt;

  std::size_t col = 0;
  Move m{K.zero(3), K.zero(3), K.zero(4)};
  if (!phi.is_zero()) {
    m.phi = phi.scaled((*x)[col++]);
  }
  m.y = m.phi;
  for (const auto& w : ws) {
    const Scalar c = (*x)[col++];
    m.witness = m.witness + w.scaled(c);
  }
  m.y = m.y + K.boundary(m.witness);
  if (m.y.is_zero() || m.y.length() > 4) return std::nullopt;
  const auto& lead = m.y.leading();
  if (!(lead.u == E.u && lead.sigma == E.sigma) || !F.is_zero(F.sub(lead.coeff, Scalar(1)))) {
    return std::nullopt;
  }
  return m;
}

// A cycle mu1 e1 + mu2 e2 with both coefficients nonzero, if one exists.
std::optional<KoszulChain> binomial_cycle(const KoszulComplex& K, const Element& e1,
                                          const Element& e2) {
  const auto& I = K.ideal();
  if (I.contains(e1.u) || I.contains(e2.u)) return std::nullopt;
  const KoszulChain x1 = K.element(e1.u, e1.sigma);
  const KoszulChain x2 = K.element(e2.u, e2.sigma);
  const KoszulChain d1 = K.boundary(x1);
  const KoszulChain d2 = K.boundary(x2);
  if (d1.is_zero() || d2.is_zero()) return std::nullopt;
  const auto& t = d2.leading();
  const Scalar c1 = d1.coefficient(t.u, t.sigma);
  if (K.field().is_zero(c1)) return std::nullopt;
  const Scalar mu = K.field().div(Scalar(-c1), t.coeff);
  KoszulChain phi = x1 + x2.scaled(mu);
  if (!K.is_cycle(phi) || phi.length() != 2) return std::nullopt;
  return phi;
}

std::optional<Monomial> divide(const Monomial& u, const Monomial& v) {
  if (!v.divides(u)) return std::nullopt;
  return u / v;
}

std::string describe_failure(const KoszulComplex& K, const KoszulChain& z) {
  const auto& lead = z.leading();
  const auto idx = lead.sigma.indices();
  const auto& I = K.ideal();
  std::ostringstream os;
  os << "no reduction step applies at leading term " << lead.u << " e" << lead.sigma.to_string()
     << " of " << z << ": x_a u " << (I.contains(lead.u.times_var(idx[0])) ? "in" : "not in")
     << " I, x_t u " << (I.contains(lead.u.times_var(idx[1])) ? "in" : "not in")
     << " I; neither a monomial exchange nor a binomial neighbour yields a cycle of length <= 4";
  return os.str();
}

}  // namespace

H3Reduction reduce_h3_principal_pborel(const KoszulComplex& K, std::uint32_t p,
                                       const KoszulChain& z) {
  const auto& I = K.ideal();
  if (!principal_generator(I, p)) {
    throw InapplicableError(I.to_string() + " is not a principal " + std::to_string(p) +
                            "-Borel ideal");
  }
  if (z.degree() != 3) throw std::invalid_argument("expected a 3-cycle");
  require_multigraded_cycle(K, z);

  H3Reduction out{{}, {}, {z, z, K.zero(4)}};
  KoszulChain cur = z;
  KoszulChain witness = K.zero(4);
  const std::size_t cap = 100000;
  for (std::size_t step = 0;; ++step) {
    if (step > cap) throw VerificationFailure("3-cycle reduction failed to terminate");
    auto nz = normalize_cycle(K, cur);
    witness = witness + nz.witness;
    cur = nz.cycle;
    if (cur.is_zero()) break;
    const KoszulTerm E = cur.leading();
    const auto idx = E.sigma.indices();
    const std::size_t a = idx[0], t = idx[1], r = idx[2];
    for (const auto& term : cur.terms()) {
      if (!I.contains(term.u.times_var(r))) {
        throw VerificationFailure("normalized 3-cycle has a term " + term.u.to_string() +
                                  " with x_r u outside the ideal");
      }
    }
    const bool in_a = I.contains(E.u.times_var(a));
    const bool in_t = I.contains(E.u.times_var(t));

    // Neighbours replacing t (indices q) and replacing a (indices c).
    std::vector<std::pair<std::size_t, Element>> Q, C;
    for (const auto& term : cur.terms()) {
      const auto& s = term.sigma;
      if (s == E.sigma || !s.contains(r)) continue;
      if (s.contains(a) && !s.contains(t)) Q.push_back({*s.without(a).without(r).max(), {term.u, term.sigma}});
      if (s.contains(t) && !s.contains(a)) C.push_back({*s.without(t).without(r).max(), {term.u, term.sigma}});
    }

    struct Attempt {
      std::string rule;
      KoszulChain phi;
      std::vector<KoszulChain> ws;
    };
    std::vector<Attempt> attempts;
    if (in_a && in_t) {
      attempts.push_back({"monomial", K.element(E.u, E.sigma), {}});
    } else {
      std::vector<std::size_t> qs;
      for (const auto& [q, e] : Q) {
        for (const auto& [c, f] : C) {
          if (c == q) qs.push_back(q);
        }
      }
      for (const auto& [q, e] : Q) {
        if (q > t) qs.push_back(q);
      }
      for (const auto& [c, f] : C) {
        if (c > t) qs.push_back(c);
      }
      for (std::size_t q = t + 1; q < r; ++q) qs.push_back(q);
      std::vector<std::size_t> seen;
      for (auto q : qs) {
        if (q <= t || q >= r || std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
        seen.push_back(q);
        const auto v = divide(E.u, Monomial::variable(K.num_vars(), q));
        if (!v) continue;
        const Monomial pu = v->times_var(r);
        const IndexSubset ps{a, t, q};
        if (!I.contains(pu) && !K.is_monomial_cycle(pu, ps)) continue;
        attempts.push_back({"exchange", K.element(pu, ps), {K.element(*v, IndexSubset{a, t, q, r})}});
      }
      for (const auto& [c, f] : C) {
        if (c < t) {
          if (auto phi = binomial_cycle(K, {E.u, E.sigma}, f)) attempts.push_back({"binomial", *phi, {}});
        }
      }
      for (const auto& [c, f] : C) {
        for (const auto& [q, e] : Q) {
          if (!(a < c && c < t && t < q)) continue;
          const auto v = divide(E.u, Monomial::variable(K.num_vars(), q));
          const auto v2 = divide(E.u.times_var(a), Monomial::variable(K.num_vars(), c) *
                                                       Monomial::variable(K.num_vars(), q));
          if (!v || !v2) continue;
          auto phi = binomial_cycle(K, {v->times_var(r), IndexSubset{a, t, q}},
                                    {v2->times_var(r), IndexSubset{c, t, q}});
          if (!phi) continue;
          attempts.push_back({"two-neighbour", *phi,
                              {K.element(*v, IndexSubset{a, t, q, r}),
                               K.element(*v2, IndexSubset{c, t, q, r})}});
        }
      }
    }

    std::optional<Move> move;
    std::string rule;
    for (const auto& at : attempts) {
      move = solve_move(K, E, at.phi, at.ws);
      if (move) {
        rule = at.rule;
        break;
      }
    }
    if (!move) {
      if (cur.length() > 2) throw InapplicableError(describe_failure(K, cur));
      out.steps.push_back({E, "short", cur, cur});
      out.companions.push_back(cur);
      cur = K.zero(3);
      break;
    }
    const KoszulChain companion = move->phi.scaled(E.coeff);
    out.steps.push_back({E, rule, move->y, companion});
    if (!companion.is_zero()) out.companions.push_back(companion);
    witness = witness + move->witness.scaled(E.coeff);
    cur = cur - move->y.scaled(E.coeff);
  }
  KoszulChain sum = K.zero(3);
  for (const auto& c : out.companions) {
    if (c.length() > 2 || !K.is_cycle(c)) {
      throw VerificationFailure("companion " + c.to_string() + " is not a short cycle");
    }
    sum = sum + c;
  }
  out.certificate = certify(K, z, sum, witness);
  return out;
}

}  // namespace koszul
