#include "koszul/lifting.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "koszul/error.hpp"

namespace koszul {

namespace {

PAdicExpansion digits(std::uint64_t x, std::uint64_t p) { return p_adic(x, p); }

Monomial xn_power(std::size_t n, std::uint64_t a) {
  return Monomial::variable(n, n, static_cast<Exponent>(a));
}

std::vector<std::size_t> total_betti(const MonomialIdeal& I, const FieldSpec& field) {
  std::vector<std::size_t> out(I.num_vars() + 1, 0);
  if (I.is_unit()) return out;
  for (const auto& e : multigraded_betti(I, field)) out[e.i] += e.dim;
  return out;
}

using CanonicalLess = bool (*)(const Monomial&, const Monomial&);
bool canonical_cmp(const Monomial& a, const Monomial& b) { return canonical_less(a, b); }

// Chain over K with the terms of z (from a complex in fewer variables).
KoszulChain extend_chain(const KoszulComplex& K, const KoszulChain& z) {
  std::vector<KoszulTerm> terms;
  for (const auto& t : z.terms()) terms.push_back({t.coeff, t.u.extended(K.num_vars()), t.sigma});
  return K.chain(z.degree(), std::move(terms));
}

// Sbar/Tbar as a quotient of S: Tbar S + (x_n).
MonomialIdeal with_last_var(const MonomialIdeal& t_bar, std::size_t n) {
  return sum(extend_vars(t_bar, n), MonomialIdeal(n, {Monomial::variable(n, n)}));
}

// The same terms read in another complex over the same ring.
KoszulChain reinterpret(const KoszulComplex& K, const KoszulChain& z) {
  return K.chain(z.degree(), z.terms());
}

}  // namespace

MonomialIdeal TwoVariableShape::ideal() const {
  if (n < 2) throw InapplicableError("the shape needs at least two variables");
  Monomial u(n);
  u.set_exponent(n - 1, gamma);
  u.set_exponent(n, alpha);
  return principal_p_borel(u, p).expand();
}

MonomialIdeal TwoVariableShape::j_part() const {
  MonomialIdeal J = MonomialIdeal::unit(n);
  const auto g = digits(gamma, p);
  for (std::size_t j = 0; j < g.digits.size(); ++j) {
    J = product(J, prefix_frobenius_power(n, n - 1, ipow(p, j), g.digit(j)));
  }
  return J;
}

std::size_t TwoVariableShape::top_digit() const {
  if (alpha == 0) throw InapplicableError("alpha = 0 has no top digit");
  return digits(alpha, p).digits.size() - 1;
}

MonomialIdeal TwoVariableShape::i_prime() const {
  const auto r = top_digit();
  const auto d = digits(alpha, p);
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (std::size_t j = 0; j <= r; ++j) {
    const auto e = j == r ? d.digit(j) - 1 : d.digit(j);
    out = product(out, prefix_frobenius_power(n, n, ipow(p, j), e));
  }
  return out;
}

MonomialIdeal TwoVariableShape::i_a(std::uint64_t a) const {
  const auto d = digits(alpha, p);
  const auto ad = digits(a, p);
  MonomialIdeal out = j_part();
  for (std::size_t j = 0; j < d.digits.size(); ++j) {
    const auto e = d.digit(j) >= ad.digit(j) ? d.digit(j) - ad.digit(j) : 0;
    out = product(out, prefix_frobenius_power(n, n, ipow(p, j), e));
  }
  return out;
}

std::vector<CasLayer> TwoVariableShape::pi_layers(std::uint64_t a) const {
  const auto d = digits(alpha, p);
  const auto g = digits(gamma, p);
  const auto ad = digits(a, p);
  std::vector<CasLayer> out;
  for (std::size_t j = 0; j < std::max(d.digits.size(), g.digits.size()); ++j) {
    const auto e = d.digit(j) >= ad.digit(j) ? d.digit(j) - ad.digit(j) : 0;
    const auto total = g.digit(j) + e;
    if (total != 0) out.push_back({j, static_cast<Exponent>(total)});
  }
  return out;
}

bool TwoVariableShape::digit_condition() const {
  const auto d = digits(alpha, p);
  const auto g = digits(gamma, p);
  for (std::size_t j = 0; j < std::max(d.digits.size(), g.digits.size()); ++j) {
    if (d.digit(j) + g.digit(j) >= p) return false;
  }
  return true;
}

std::string TwoVariableShape::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " gamma=" << gamma << " alpha=" << alpha;
  return os.str();
}

std::optional<TwoVariableShape> detect_shape(const MonomialIdeal& I, std::uint64_t p) {
  const std::size_t n = I.num_vars();
  if (n < 2) return std::nullopt;
  const auto g = principal_generator(I, p);
  if (!g) return std::nullopt;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (g->nu(k) != 0) return std::nullopt;
  }
  return TwoVariableShape{n, p, g->nu(n - 1), g->nu(n)};
}

ColonDecompositionReport colon_decomposition_check(const TwoVariableShape& shape) {
  ColonDecompositionReport rep;
  rep.shape = shape;
  rep.r = shape.top_digit();
  const auto I = shape.ideal();
  const auto pr = ipow(shape.p, rep.r);
  rep.top_colon_holds =
      colon_monomial(I, xn_power(shape.n, pr)) == product(shape.j_part(), shape.i_prime());
  for (std::uint64_t a = 0; a <= pr; ++a) {
    const auto lhs = pi_drop_last_var(colon_monomial(I, xn_power(shape.n, a)));
    if (!(lhs == pi_drop_last_var(shape.i_a(a)))) rep.projection_failures.push_back(a);
  }
  return rep;
}

std::vector<KoszulChain> layered_basis_chains(const KoszulComplex& K, std::uint64_t p,
                                              const std::vector<CasLayer>& layers, std::size_t i) {
  if (layers.empty()) return {};  // the unit ideal
  std::vector<KoszulChain> out;
  if (i == 0) {
    out.push_back(K.element(Monomial(K.num_vars()), IndexSubset()));
    return out;
  }
  for (const auto& e : c_basis(K.num_vars(), p, layers, i)) {
    auto z = e.chain(K);
    if (z.is_zero()) throw VerificationFailure("basis element " + e.u.to_string() + " lies in the ideal");
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

using Basis = std::vector<std::vector<KoszulChain>>;

std::string layer_name(const TwoVariableShape& s, std::uint64_t a) {
  return "layer (" + s.to_string() + ", a=" + std::to_string(a) + ")";
}

void verify_layer(const MonomialIdeal& T, const Basis& basis, const FieldSpec& field,
                  const std::string& name) {
  const auto betti = total_betti(T, field);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto v = verify_basis(T, basis[i], i, field, betti[i]);
    if (!v.ok) {
      throw VerificationFailure(name + ", degree " + std::to_string(i) + ": " + v.failed_check +
                                " check failed: " + v.detail);
    }
  }
}

// Basis of H(x; S/(I : x_n^a)) from that of H(x; S/(I : x_n^{a+1})).
Basis lift_step(const TwoVariableShape& shape, std::uint64_t a, const MonomialIdeal& T,
                const MonomialIdeal& T_next, const Basis& next, const FieldSpec& field,
                LiftLayer& record) {
  const std::size_t n = shape.n;
  const std::uint64_t p = shape.p;
  const KoszulComplex K(T, field);
  const MonomialIdeal pt = pi_drop_last_var(T);
  const MonomialIdeal pt_next = pi_drop_last_var(T_next);
  const auto layers = shape.pi_layers(a);
  const auto layers_next = shape.pi_layers(a + 1);
  if (!(pt == expand_layers(n - 1, p, layers)) || !(pt_next == expand_layers(n - 1, p, layers_next))) {
    throw VerificationFailure(layer_name(shape, a) + ": projection differs from the layered product");
  }
  const KoszulComplex Kbar(pt, field);
  const KoszulComplex Kbar_next(pt_next, field);

  Basis out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    // x_n times the previous basis, keeping independent classes.
    std::map<Monomial, std::pair<std::unique_ptr<Strand>, std::vector<KoszulChain>>, CanonicalLess>
        chosen(canonical_cmp);
    for (const auto& b : next[i]) {
      std::vector<KoszulTerm> terms;
      for (const auto& t : b.terms()) terms.push_back({t.coeff, t.u.times_var(n), t.sigma});
      KoszulChain c = K.chain(i, std::move(terms));
      if (c.is_zero()) continue;
      const Monomial md = *c.multidegree();
      auto& slot = chosen[md];
      if (!slot.first) slot.first = std::make_unique<Strand>(K, i, md);
      auto trial = slot.second;
      trial.push_back(c);
      if (slot.first->class_rank(trial) == trial.size()) {
        slot.second.push_back(c);
        out[i].push_back(c);
      }
    }
    // The basis of the projection, read in S.
    for (const auto& b : layered_basis_chains(Kbar, p, layers, i)) out[i].push_back(extend_chain(K, b));
    // Kernel of eta_{i-1}, lifted with a wedge by e_n.
    if (i == 0) continue;
    const auto targets = layered_basis_chains(Kbar_next, p, layers_next, i - 1);
    for (const auto& b : layered_basis_chains(Kbar, p, layers, i - 1)) {
      const KoszulChain image = reinterpret(Kbar_next, b);
      const KoszulChain wedge = K.wedge(extend_chain(K, b), n);
      if (image.is_zero()) {
        out[i].push_back(wedge);
        continue;
      }
      const Strand st(Kbar_next, i - 1, *image.multidegree());
      const auto pre = st.boundary_preimage(image);
      if (!pre) {
        bool listed = false;
        for (const auto& tgt : targets) listed = listed || tgt == image;
        if (!listed) record.eta_identity_or_zero = false;
        continue;
      }
      KoszulChain xz = K.multiply(extend_chain(K, *pre), Monomial::variable(n, n));
      const KoszulChain plus = wedge + ((i - 1) % 2 == 0 ? xz : -xz);
      const KoszulChain minus = wedge - ((i - 1) % 2 == 0 ? xz : -xz);
      if (K.is_cycle(plus)) {
        out[i].push_back(plus);
      } else if (K.is_cycle(minus)) {
        out[i].push_back(minus);
      } else {
        throw VerificationFailure(layer_name(shape, a) + ": lift of " + b.to_string() +
                                  " is not a cycle");
      }
    }
  }
  return out;
}

Basis lift_shape(const TwoVariableShape& shape, const FieldSpec& field,
                 std::vector<LiftLayer>& layers) {
  const std::size_t n = shape.n;
  const auto I = shape.ideal();
  if (shape.alpha == 0) {
    // I = J S with J in n - 1 variables and x_n regular on S/I: H(x; S/I) = H(x'; Sbar/J).
    Basis out(n + 1);
    const auto glayers = shape.pi_layers(0);
    const KoszulComplex Kbar(expand_layers(n - 1, shape.p, glayers), field);
    const KoszulComplex K(I, field);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& b : layered_basis_chains(Kbar, shape.p, glayers, i)) {
        out[i].push_back(extend_chain(K, b));
      }
    }
    verify_layer(I, out, field, layer_name(shape, 0));
    layers.push_back({shape.alpha, 0, I, out, true});
    return out;
  }
  const auto r = shape.top_digit();
  const auto pr = ipow(shape.p, r);
  TwoVariableShape sub = shape;
  sub.alpha = static_cast<Exponent>(shape.alpha - pr);
  Basis cur = lift_shape(sub, field, layers);
  MonomialIdeal T_next = colon_monomial(I, xn_power(n, pr));
  if (!(T_next == sub.ideal())) {
    throw VerificationFailure(layer_name(shape, pr) + ": (I : x_n^{p^r}) differs from J I'");
  }
  for (std::uint64_t a = pr; a-- > 0;) {
    const MonomialIdeal T = colon_monomial(I, xn_power(n, a));
    LiftLayer record{shape.alpha, a, T, {}, true};
    cur = lift_step(shape, a, T, T_next, cur, field, record);
    verify_layer(T, cur, field, layer_name(shape, a));
    record.basis = cur;
    layers.push_back(std::move(record));
    T_next = T;
  }
  return cur;
}

}  // namespace

LiftReport lift_monomial_basis(const TwoVariableShape& shape, const FieldSpec& field) {
  if (shape.n < 2) throw InapplicableError("the shape needs at least two variables");
  require_prime(shape.p);
  if (!shape.digit_condition()) {
    throw InapplicableError("digit condition alpha_j + gamma_j < p fails for " + shape.to_string());
  }
  LiftReport rep;
  rep.shape = shape;
  rep.basis = lift_shape(shape, field, rep.layers);
  for (const auto& level : rep.basis) {
    for (const auto& z : level) rep.all_monomial = rep.all_monomial && z.length() == 1;
  }
  return rep;
}

ShiftIdentityReport shift_identity_check(const MonomialIdeal& t_bar, const FieldSpec& field) {
  ShiftIdentityReport rep;
  rep.over_sbar = betti_table(t_bar, field);
  rep.over_s = betti_table(with_last_var(t_bar, t_bar.num_vars() + 1), field);
  rep.holds = true;
  auto check = [&](std::size_t i, std::uint64_t j) {
    std::size_t expected = rep.over_sbar.get(i, j);
    if (i > 0 && j > 0) expected += rep.over_sbar.get(i - 1, j - 1);
    if (rep.over_s.get(i, j) != expected) rep.holds = false;
  };
  for (const auto& [key, dim] : rep.over_s.entries()) check(key.first, key.second);
  for (const auto& [key, dim] : rep.over_sbar.entries()) {
    check(key.first, key.second);
    check(key.first + 1, key.second + 1);
  }
  return rep;
}

std::vector<ConnectingMapReport> connecting_map_check(const MonomialIdeal& T,
                                                      const FieldSpec& field) {
  const std::size_t n = T.num_vars();
  if (n < 2) throw InapplicableError("need at least two variables");
  const Monomial xn = Monomial::variable(n, n);
  const MonomialIdeal Tc = colon_monomial(T, xn);
  const MonomialIdeal Tbar = pi_drop_last_var(T);
  const MonomialIdeal Tbar_c = pi_drop_last_var(Tc);
  const KoszulComplex K(T, field);
  const KoszulComplex Kbar_c(Tbar_c, field);
  const auto beta_c = total_betti(Tc, field);
  const auto beta_bar = total_betti(Tbar, field);
  const auto beta_bar_s = total_betti(with_last_var(Tbar, n), field);
  const auto entries_c = Tc.is_unit() ? std::vector<MultigradedEntry>{} : multigraded_betti(Tc, field);
  const auto entries_bar =
      Tbar.is_unit() ? std::vector<MultigradedEntry>{} : multigraded_betti(Tbar, field);

  std::vector<ConnectingMapReport> out;
  for (std::size_t i = 0; i < n; ++i) {
    ConnectingMapReport rep;
    rep.i = i;
    // Rank of x_n : H_i(S/(T:x_n)) -> H_i(S/T).
    std::size_t rank_mult = 0;
    for (const auto& e : entries_c) {
      if (e.i != i) continue;
      const auto reps = strand_homology(Tc, i, e.a, field).homology_representatives;
      std::vector<KoszulChain> images;
      for (const auto& z : reps) {
        std::vector<KoszulTerm> terms;
        for (const auto& t : z.terms()) terms.push_back({t.coeff, t.u * xn, t.sigma});
        images.push_back(K.chain(i, std::move(terms)));
      }
      rank_mult += Strand(K, i, e.a * xn).class_rank(images);
    }
    rep.image_delta = beta_c[i] - rank_mult;
    rep.kernel_delta = beta_bar_s[i + 1] - rep.image_delta;
    for (const auto& e : entries_bar) {
      if (e.i != i) continue;
      const auto reps = strand_homology(Tbar, i, e.a, field).homology_representatives;
      std::vector<KoszulChain> images;
      for (const auto& z : reps) images.push_back(reinterpret(Kbar_c, z));
      rep.rank_eta += Strand(Kbar_c, i, e.a).class_rank(images);
    }
    rep.kernel_eta = beta_bar[i] - rep.rank_eta;
    rep.betti_bar_next = i + 1 < beta_bar.size() ? beta_bar[i + 1] : 0;
    rep.holds = rep.image_delta == rep.rank_eta &&
                rep.kernel_delta == rep.betti_bar_next + rep.kernel_eta;
    out.push_back(rep);
  }
  return out;
}

}  // namespace koszul
