#include "koszul/workbench.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "koszul/ah_basis.hpp"
#include "koszul/betti.hpp"
#include "koszul/cycles.hpp"
#include "koszul/error.hpp"
#include "koszul/h3_reduction.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/min_length.hpp"
#include "koszul/parser.hpp"

namespace koszul {

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

const std::vector<FieldSpec>& three_fields() {
  static const std::vector<FieldSpec> f = {FieldSpec::rationals(), FieldSpec::prime(2),
                                           FieldSpec::prime(3)};
  return f;
}

MonomialIdeal random_ideal_in(Rng& rng, std::size_t n, std::size_t max_gens,
                              std::uint64_t max_degree) {
  const auto count = uniform(rng, 1, max_gens);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    gens.push_back(random_monomial(rng, n, uniform(rng, 1, max_degree)));
  }
  return MonomialIdeal(n, std::move(gens));
}

class Run {
 public:
  Run(SuiteResult& result) : r_(result) {}

  std::uint64_t trial_seed(std::size_t k) const { return r_.seed + k; }

  void expect(bool ok, std::size_t k, const std::string& detail) {
    ++r_.checks;
    if (!ok) refute(k, detail);
  }

  void refute(std::size_t k, const std::string& detail) {
    r_.refutations.push_back({k, detail,
                              "koszul verify " + r_.suite + " --seed " +
                                  std::to_string(trial_seed(k)) + " --trials 1"});
  }

  void log(const std::string& line) { r_.log.push_back(line); }

  // Any exception inside a trial is a refutation of that trial.
  void guarded(std::size_t k, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++r_.checks;
      refute(k, std::string("exception: ") + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

std::string element_key(const KoszulChain& z) {
  if (z.length() != 1) return "<" + z.to_string() + ">";
  const auto& t = z.leading();
  return t.u.to_string() + "*e" + t.sigma.to_string();
}

std::set<std::string> element_keys(const std::vector<KoszulChain>& chains) {
  std::set<std::string> out;
  for (const auto& z : chains) out.insert(element_key(z));
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ", ";
    out += x;
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------- 2cyc

void trial_2cyc(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const auto I = random_monomial_ideal(rng, 6, 6, 4);
  const KoszulComplex K(I, FieldSpec::rationals());
  std::size_t beta = 0;
  std::size_t strands = 0;
  for (const auto& a : candidate_multidegrees(I, 2)) {
    const Strand st(K, 2, a);
    const auto b = st.betti();
    if (b == 0) continue;
    ++strands;
    beta += b;
    std::vector<KoszulChain> monomial;
    for (const auto& [u, s] : st.basis()) {
      if (K.is_monomial_cycle(u, s)) monomial.push_back(K.element(u, s));
    }
    const auto where = " at " + a.to_string() + " for " + render_ideal(I);
    run.expect(st.class_rank(monomial) == b, k, "monomial cycles do not span H_2" + where);
    std::vector<KoszulChain> found;
    for (const auto& z : st.homology_representatives()) {
      const auto d = decompose_h2_monomial(K, z);
      for (const auto& m : d.monomial_cycles) {
        run.expect(m.length() == 1 && K.is_cycle(m), k,
                   "decomposition produced a non-monomial cycle " + m.to_string() + where);
        found.push_back(m);
      }
    }
    run.expect(st.class_rank(found) == b, k, "decomposition companions do not span H_2" + where);
  }
  run.log("trial " + std::to_string(k) + ": " + render_ideal(I) + " beta_2=" +
          std::to_string(beta) + " strands=" + std::to_string(strands));
}

// ---------------------------------------------------------------- main1

void trial_main1(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const std::size_t n = uniform(rng, 3, 5);
  const std::uint64_t p = uniform(rng, 0, 1) ? 3 : 2;
  const auto u = random_pborel_generator(rng, n, 9);
  const auto I = principal_p_borel(u, p).expand();
  const KoszulComplex K(I, FieldSpec::rationals());
  std::size_t beta = 0;
  std::size_t searched = 0;
  for (const auto& a : candidate_multidegrees(I, 3)) {
    const Strand st(K, 3, a);
    const auto b = st.betti();
    if (b == 0) continue;
    beta += b;
    const auto where = " at " + a.to_string() + " for pborel(" + u.to_string() + "; " +
                       std::to_string(p) + ")";
    std::vector<KoszulChain> found;
    for (const auto& z : st.homology_representatives()) {
      const auto red = reduce_h3_principal_pborel(K, static_cast<std::uint32_t>(p), z);
      for (const auto& c : red.companions) {
        run.expect(c.length() <= 2 && K.is_cycle(c), k,
                   "reduction companion " + c.to_string() + " is not a short cycle" + where);
        found.push_back(c);
      }
    }
    run.expect(st.class_rank(found) == b, k, "cycles of length <= 2 do not span H_3" + where);
    if (st.dimension() <= kMaxSearchDimension) {
      ++searched;
      const auto s = search_min_length_strand(K, 3, a, 2);
      run.expect(s.status == SearchStatus::Found, k,
                 "exhaustive search finds no spanning set of length <= 2" + where);
    }
  }
  run.log("trial " + std::to_string(k) + ": pborel(" + u.to_string() + "; " + std::to_string(p) +
          ") n=" + std::to_string(n) + " beta_3=" + std::to_string(beta) +
          " searched=" + std::to_string(searched));
}

// ---------------------------------------------------------------- main

void trial_main(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const auto shape = random_shape(rng, 4);
  const auto I = shape.ideal();
  const auto where = " for " + shape.to_string();
  std::vector<BettiTable> tables;
  bool monomial = true;
  for (const auto& f : three_fields()) {
    tables.push_back(betti_table(I, f));
    const auto lift = lift_monomial_basis(shape, f);
    monomial = monomial && lift.all_monomial;
    run.expect(lift.all_monomial, k, "lifted basis is not monomial over " + f.name() + where);
    for (std::size_t i = 2; i <= shape.n; ++i) {
      const auto v = verify_basis(I, lift.basis[i], i, f, tables.back().total(i));
      run.expect(v.ok, k,
                 "H_" + std::to_string(i) + " basis fails " + v.failed_check + " over " + f.name() +
                     where + ": " + v.detail);
    }
  }
  for (std::size_t t = 1; t < tables.size(); ++t) {
    run.expect(tables[t] == tables[0], k,
               "Betti tables differ between " + tables[0].field().name() + " and " +
                   tables[t].field().name() + where);
  }
  run.log("trial " + std::to_string(k) + ": (gamma, alpha, p, n) = (" +
          std::to_string(shape.gamma) + ", " + std::to_string(shape.alpha) + ", " +
          std::to_string(shape.p) + ", " + std::to_string(shape.n) + ")" +
          (monomial ? " monomial" : " not monomial"));
}

// ---------------------------------------------------------------- ah

void trial_ah(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const std::size_t n = uniform(rng, 2, 4);
  const std::uint64_t p = uniform(rng, 0, 1) ? 3 : 2;
  PBorelFactorization F(n, p);
  const std::size_t layers = uniform(rng, 1, 2);
  bool any = false;
  for (std::size_t j = 0; j < layers; ++j) {
    const auto a = static_cast<Exponent>(uniform(rng, 0, p - 1));
    F.set_alpha(n, j, a);
    any = any || a != 0;
  }
  if (!any) F.set_alpha(n, 0, 1);
  const auto I = F.expand();
  const auto where = " for " + render_ideal(I) + " p=" + std::to_string(p);
  std::size_t total = 0;
  for (const auto& f : three_fields()) {
    const KoszulComplex K(I, f);
    const auto table = betti_table(I, f);
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<KoszulChain> chains;
      for (const auto& e : ah_basis(F, i)) chains.push_back(e.chain(K));
      const auto v = verify_basis(I, chains, i, f, table.total(i));
      run.expect(v.ok, k,
                 "B_" + std::to_string(i) + " fails " + v.failed_check + " over " + f.name() +
                     where + ": " + v.detail);
      total += chains.size();
    }
  }
  run.log("trial " + std::to_string(k) + ":" + where + " elements=" + std::to_string(total));
}

// ---------------------------------------------------------------- extremal

void trial_extremal(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  std::uint64_t p = 2;
  const auto I = random_borel_type(rng, 5, p);
  const auto where = " for " + render_ideal(I);
  run.expect(is_borel_type(I), k, "sampled ideal is not of Borel type" + where);
  const auto chain = extremal_via_chain(I);
  std::uint64_t chain_reg = 0;
  for (const auto& c : chain) chain_reg = std::max(chain_reg, c.r);
  std::vector<Corner> first;
  for (const auto& f : three_fields()) {
    const auto table = betti_table(I, f);
    const auto corners = table.corners();
    if (f.is_rational()) first = corners;
    run.expect(corners == first, k, "corners differ over " + f.name() + where);
    for (const auto& c : corners) {
      const bool listed = std::any_of(chain.begin(), chain.end(), [&](const ExtremalCandidate& e) {
        return e.t == c.t && e.r == c.r && e.dimension == c.value;
      });
      run.expect(listed, k,
                 "corner (" + std::to_string(c.t) + ", " + std::to_string(c.r) + ") value " +
                     std::to_string(c.value) + " over " + f.name() +
                     " is not predicted by the Borel chain" + where);
    }
    run.expect(table.regularity() == static_cast<std::int64_t>(chain_reg), k,
               "regularity " + std::to_string(table.regularity()) + " over " + f.name() +
                   " differs from the chain value " + std::to_string(chain_reg) + where);
  }
  std::ostringstream os;
  os << "trial " << k << ": " << render_ideal(I) << " p=" << p << " corners=";
  for (const auto& c : first) os << "(" << c.t << "," << c.r << ":" << c.value << ")";
  run.log(os.str());
}

// ---------------------------------------------------------------- lemma-h

void trial_lemma_h(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const std::size_t n = uniform(rng, 3, 5);
  const auto t_bar = random_ideal_in(rng, n - 1, 5, 3);
  const auto T = random_ideal_in(rng, n, 5, 3);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    const auto shift = shift_identity_check(t_bar, f);
    run.expect(shift.holds, k,
               "shift identity fails over " + f.name() + " for " + render_ideal(t_bar));
  }
  std::size_t degrees = 0;
  for (const auto& c : connecting_map_check(T, FieldSpec::rationals())) {
    ++degrees;
    run.expect(c.holds, k,
               "connecting map dimensions disagree in degree " + std::to_string(c.i) + " for " +
                   render_ideal(T));
  }
  run.log("trial " + std::to_string(k) + ": Tbar " + render_ideal(t_bar) + ", T " + render_ideal(T) +
          " degrees=" + std::to_string(degrees));
}

// ---------------------------------------------------------------- ek

void trial_ek(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const auto I = random_strongly_stable(rng, 5);
  const auto where = " for " + render_ideal(I);
  run.expect(is_strongly_stable(I), k, "sampled ideal is not strongly stable" + where);
  const auto formula = ek_betti_stable(I);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    run.expect(betti_table(I, f) == formula, k,
               "closed-form Betti table differs from the homology over " + f.name() + where);
  }
  run.log("trial " + std::to_string(k) + ": " + render_ideal(I) + " pd=" +
          std::to_string(formula.projective_dimension()));
}

// ---------------------------------------------------------------- pdiv

void trial_pdiv(Run& run, std::size_t k) {
  Rng rng(run.trial_seed(k));
  const auto shape = random_shape(rng, 4);
  const auto rep = colon_decomposition_check(shape);
  run.expect(rep.top_colon_holds, k, "top colon decomposition fails for " + shape.to_string());
  for (const auto a : rep.projection_failures) {
    run.expect(false, k,
               "projection of the colon by x_n^" + std::to_string(a) + " differs for " +
                   shape.to_string());
  }
  run.log("trial " + std::to_string(k) + ": " + shape.to_string() + " r=" + std::to_string(rep.r));
}

// ---------------------------------------------------------------- lemmas3

// Nested prefix products prod_q (x_1..x_q)^{alpha_q}, memoized.
class NestedCache {
 public:
  const MonomialIdeal& get(const std::vector<Exponent>& alpha) {
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
    const std::size_t n = alpha.size();
    MonomialIdeal J = MonomialIdeal::unit(n);
    for (std::size_t q = 1; q <= n; ++q) {
      J = product(J, power(MonomialIdeal::prefix(n, q), alpha[q - 1]));
    }
    return cache_.emplace(alpha, std::move(J)).first->second;
  }

 private:
  std::map<std::vector<Exponent>, MonomialIdeal> cache_;
};

struct NestedInstance {
  std::size_t n = 0;
  std::size_t a = 0;
  std::vector<Exponent> alpha;
  std::uint64_t degree = 0;
};

NestedInstance draw_nested(Rng& rng) {
  NestedInstance s;
  s.n = uniform(rng, 2, 5);
  s.a = uniform(rng, 1, s.n - 1);
  s.alpha.resize(s.n);
  for (auto& x : s.alpha) {
    x = static_cast<Exponent>(uniform(rng, 0, 2));
    s.degree += x;
  }
  return s;
}

std::string alpha_text(const std::vector<Exponent>& alpha) {
  std::string out = "(";
  for (std::size_t k = 0; k < alpha.size(); ++k) out += (k ? "," : "") + std::to_string(alpha[k]);
  return out + ")";
}

Monomial random_in_vars_above(Rng& rng, std::size_t n, std::size_t a, std::uint64_t degree) {
  Monomial w(n);
  for (std::uint64_t d = 0; d < degree; ++d) {
    const auto q = uniform(rng, a + 1, n);
    w.set_exponent(q, w.nu(q) + 1);
  }
  return w;
}

Monomial random_divisor_above(Rng& rng, const Monomial& u, std::size_t a) {
  Monomial v(u.num_vars());
  for (std::size_t q = a + 1; q <= u.num_vars(); ++q) {
    v.set_exponent(q, static_cast<Exponent>(uniform(rng, 0, u.nu(q))));
  }
  return v;
}

constexpr std::size_t kMaxAttempts = 2000;

struct LemmaOutcome {
  bool found = false;  // hypotheses satisfied
  bool holds = true;
  std::string detail;
};

LemmaOutcome lemma_split(Rng& rng, NestedCache& cache) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto s = draw_nested(rng);
    if (s.degree == 0) continue;
    const auto u = random_monomial(rng, s.n, s.degree - 1 + uniform(rng, 0, 1));
    const auto& J = cache.get(s.alpha);
    if (!J.contains(u.times_var(s.a)) || J.contains(u.times_var(s.a + 1))) continue;
    std::vector<Exponent> low(s.alpha), high(s.alpha);
    std::fill(low.begin() + static_cast<std::ptrdiff_t>(s.a), low.end(), 0);
    std::fill(high.begin(), high.begin() + static_cast<std::ptrdiff_t>(s.a), 0);
    const auto [u_low, u_high] = split_monomial(u, s.a);
    LemmaOutcome out{true, true, ""};
    out.holds = cache.get(high).contains(u_high) && !cache.get(low).contains(u_low);
    if (!out.holds) {
      out.detail = "alpha=" + alpha_text(s.alpha) + " a=" + std::to_string(s.a) + " u=" + u.to_string();
    }
    return out;
  }
  return {};
}

LemmaOutcome lemma_crit(Rng& rng, NestedCache& cache, bool any_target) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto s = draw_nested(rng);
    if (s.degree == 0) continue;
    const auto& J = cache.get(s.alpha);
    const auto u = random_monomial(rng, s.n, uniform(rng, s.degree > 2 ? s.degree - 2 : 0, s.degree));
    if (J.contains(u)) continue;
    const std::size_t t = any_target ? uniform(rng, s.a + 1, s.n) : s.a + 1;
    // v and w live in the variables x_q with q >= t.
    const auto v = random_divisor_above(rng, u, t - 1);
    const auto w = random_in_vars_above(rng, s.n, t - 1, uniform(rng, 0, 3));
    const auto r = static_cast<Exponent>(uniform(rng, 1, 3));
    if (!J.contains(w * (u / v))) continue;
    if (!J.contains(u * Monomial::variable(s.n, s.a, r))) continue;
    LemmaOutcome out{true, true, ""};
    out.holds = J.contains(u * Monomial::variable(s.n, t, r));
    if (!out.holds) {
      out.detail = "alpha=" + alpha_text(s.alpha) + " a=" + std::to_string(s.a) +
                   " t=" + std::to_string(t) + " u=" + u.to_string() + " v=" + v.to_string() +
                   " w=" + w.to_string() + " r=" + std::to_string(r);
    }
    return out;
  }
  return {};
}

struct PBorelPool {
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;

  PBorelPool() {
    Rng rng(kDefaultSeed);
    while (ideals.size() < 48) {
      const std::size_t n = uniform(rng, 4, 5);
      const std::uint64_t p = uniform(rng, 0, 1) ? 3 : 2;
      const auto u = random_pborel_generator(rng, n, 9);
      ideals.emplace_back("pborel(" + u.to_string() + "; " + std::to_string(p) + ") n=" +
                              std::to_string(n),
                          principal_p_borel(u, p).expand());
    }
  }
};

struct Quad {
  std::size_t a, t, q, r;
};

Quad draw_quad(Rng& rng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k + 1;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(4);
  std::sort(idx.begin(), idx.end());
  Quad out{idx[0], idx[1], idx[2], idx[3]};
  if (uniform(rng, 0, 1)) std::swap(out.t, out.q);
  return out;
}

// x_i * g / x_j as a monomial, or nullopt when x_j does not divide x_i * g.
std::optional<Monomial> exchange(const Monomial& g, std::size_t i, std::size_t j) {
  const auto m = g.times_var(i);
  if (m.nu(j) == 0) return std::nullopt;
  return m.div_var(j);
}

bool member(const MonomialIdeal& I, const std::optional<Monomial>& m) {
  return m && I.contains(*m);
}

LemmaOutcome lemma_three_cycle(Rng& rng, const PBorelPool& pool, bool second) {
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto& [name, I] = pool.ideals[uniform(rng, 0, pool.ideals.size() - 1)];
    const std::size_t n = I.num_vars();
    const auto quad = draw_quad(rng, n);
    const auto& gens = I.gens();
    auto gamma = gens[uniform(rng, 0, gens.size() - 1)];
    if (!second && uniform(rng, 0, 1)) {
      gamma = gamma * random_monomial(rng, n, uniform(rng, 1, 2));
    }
    if (gamma.nu(quad.q) == 0 || gamma.nu(quad.r) == 0) {
      if (second) continue;
      if (gamma.nu(quad.q) == 0) gamma = gamma.times_var(quad.q);
      if (gamma.nu(quad.r) == 0) gamma = gamma.times_var(quad.r);
    }
    const auto [a, t, q, r] = quad;
    LemmaOutcome out{true, true, ""};
    if (!second) {
      if (!member(I, exchange(gamma, a, r)) || !member(I, exchange(gamma, t, q))) continue;
      out.holds = member(I, exchange(gamma, t, r)) || member(I, exchange(gamma, a, q));
    } else {
      if (!member(I, exchange(gamma, t, r)) || !member(I, exchange(gamma, a, q)) ||
          member(I, exchange(gamma, t, q))) {
        continue;
      }
      if (q > t) {
        out.holds = member(I, exchange(gamma, a, r));
      } else {
        out.holds = I.contains(gamma.times_var(t).times_var(a).div_var(r).div_var(q));
      }
    }
    if (!out.holds) {
      out.detail = name + " a=" + std::to_string(a) + " t=" + std::to_string(t) +
                   " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                   " gamma=" + gamma.to_string();
    }
    return out;
  }
  return {};
}

void run_lemmas3(Run& run, std::size_t trials) {
  NestedCache cache;
  const PBorelPool pool;
  const std::vector<std::pair<std::string, std::function<LemmaOutcome(Rng&)>>> lemmas = {
      {"split", [&](Rng& g) { return lemma_split(g, cache); }},
      {"crit", [&](Rng& g) { return lemma_crit(g, cache, false); }},
      {"crit2", [&](Rng& g) { return lemma_crit(g, cache, true); }},
      {"3-cycle1", [&](Rng& g) { return lemma_three_cycle(g, pool, false); }},
      {"3-cycle2", [&](Rng& g) { return lemma_three_cycle(g, pool, true); }},
  };
  for (std::size_t l = 0; l < lemmas.size(); ++l) {
    std::size_t instances = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      Rng rng(run.trial_seed(k) ^ (0x9E3779B97F4A7C15ULL * (l + 1)));
      const auto out = lemmas[l].second(rng);
      if (!out.found) {
        run.expect(false, k, lemmas[l].first + ": no instance satisfying the hypotheses");
        continue;
      }
      ++instances;
      run.expect(out.holds, k, lemmas[l].first + " refuted: " + out.detail);
    }
    run.log(lemmas[l].first + ": " + std::to_string(instances) + " instances");
  }
}

}  // namespace

Monomial random_monomial(Rng& rng, std::size_t num_vars, std::uint64_t degree) {
  Monomial u(num_vars);
  for (std::uint64_t d = 0; d < degree; ++d) {
    const auto q = uniform(rng, 1, num_vars);
    u.set_exponent(q, u.nu(q) + 1);
  }
  return u;
}

MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t max_vars, std::size_t max_gens,
                                    std::uint64_t max_degree) {
  const std::size_t n = uniform(rng, 2, max_vars);
  return random_ideal_in(rng, n, max_gens, max_degree);
}

Monomial random_pborel_generator(Rng& rng, std::size_t num_vars, std::uint64_t max_degree) {
  return random_monomial(rng, num_vars, uniform(rng, 1, max_degree));
}

TwoVariableShape random_shape(Rng& rng, std::size_t max_vars) {
  TwoVariableShape s;
  s.n = uniform(rng, 2, max_vars);
  s.p = uniform(rng, 0, 1) ? 3 : 2;
  const std::size_t digits = s.p == 2 ? 3 : 2;
  while (s.alpha == 0) {
    s.alpha = 0;
    s.gamma = 0;
    std::uint64_t place = 1;
    for (std::size_t j = 0; j < digits; ++j, place *= s.p) {
      const auto sum = uniform(rng, 0, s.p - 1);
      const auto ad = uniform(rng, 0, sum);
      s.alpha += static_cast<Exponent>(ad * place);
      s.gamma += static_cast<Exponent>((sum - ad) * place);
    }
  }
  return s;
}

MonomialIdeal random_borel_type(Rng& rng, std::size_t max_vars, std::uint64_t& p) {
  const std::size_t n = uniform(rng, 2, max_vars);
  p = uniform(rng, 0, 1) ? 3 : 2;
  const auto count = uniform(rng, 1, 3);
  MonomialIdeal I = MonomialIdeal::zero(n);
  for (std::size_t k = 0; k < count; ++k) {
    I = sum(I, principal_p_borel(random_monomial(rng, n, uniform(rng, 1, 5)), p).expand());
  }
  return I;
}

MonomialIdeal random_strongly_stable(Rng& rng, std::size_t max_vars) {
  const std::size_t n = uniform(rng, 2, max_vars);
  const auto count = uniform(rng, 1, 3);
  MonomialIdeal I = MonomialIdeal::zero(n);
  for (std::size_t k = 0; k < count; ++k) {
    // Below the prime every exponent is a single digit: the Borel closure.
    I = sum(I, principal_p_borel(random_monomial(rng, n, uniform(rng, 1, 4)), 101).expand());
  }
  return I;
}

std::vector<std::string> suite_names() {
  return {"lemmas3", "2cyc", "main1", "main", "ah", "extremal", "lemma-h", "ek", "pdiv"};
}

std::size_t default_trials(const std::string& suite) {
  static const std::map<std::string, std::size_t> d = {
      {"lemmas3", 10000}, {"2cyc", 100}, {"main1", 50},    {"main", 25}, {"ah", 25},
      {"extremal", 50},   {"lemma-h", 25}, {"ek", 50}, {"pdiv", 50}};
  const auto it = d.find(suite);
  if (it == d.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials) {
  static const std::map<std::string, void (*)(Run&, std::size_t)> per_trial = {
      {"2cyc", trial_2cyc},         {"main1", trial_main1},     {"main", trial_main},
      {"ah", trial_ah},             {"extremal", trial_extremal}, {"lemma-h", trial_lemma_h},
      {"ek", trial_ek},             {"pdiv", trial_pdiv}};
  SuiteResult result;
  result.suite = suite;
  result.seed = seed;
  result.trials = trials;
  Run run(result);
  if (suite == "lemmas3") {
    run_lemmas3(run, trials);
    return result;
  }
  const auto it = per_trial.find(suite);
  if (it == per_trial.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  for (std::size_t k = 0; k < trials; ++k) {
    run.guarded(k, [&] { it->second(run, k); });
  }
  return result;
}

// ---------------------------------------------------------------- reproductions

bool ReproResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

namespace {

struct TermSpec {
  long coeff;
  std::vector<Exponent> u;
  std::vector<std::size_t> sigma;
};

KoszulChain build(const KoszulComplex& K, std::size_t degree, const std::vector<TermSpec>& spec) {
  std::vector<KoszulTerm> terms;
  for (const auto& t : spec) {
    terms.push_back({Scalar(t.coeff), Monomial(t.u), IndexSubset::from_indices(t.sigma)});
  }
  return K.chain(degree, std::move(terms));
}

std::vector<KoszulChain> build_elements(const KoszulComplex& K, std::size_t degree,
                                        const std::vector<TermSpec>& spec) {
  std::vector<KoszulChain> out;
  for (const auto& t : spec) out.push_back(build(K, degree, {t}));
  return out;
}

class Checks {
 public:
  explicit Checks(ReproResult& r) : r_(r) {}

  template <typename T>
  void equal(const std::string& label, const T& expected, const T& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    r_.checks.push_back({label, e.str(), a.str(), expected == actual});
  }

  void text(const std::string& label, const std::string& expected, const std::string& actual) {
    r_.checks.push_back({label, expected, actual, expected == actual});
  }

  // Runs body; an exception becomes a failed check.
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      r_.checks.push_back({label, "no exception", std::string("exception: ") + e.what(), false});
    }
  }

 private:
  ReproResult& r_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string length_text(const ClassLengthReport& r) {
  if (r.status == SearchStatus::BoundExceeded) return "bound exceeded";
  if (!r.length) return "none up to bound";
  return std::to_string(*r.length);
}

MonomialIdeal example_ideal(const std::string& text) { return parse_ideal(text).evaluate(); }

// Data for the examples.
const std::vector<TermSpec> kIllBasis = {
    {1, {1, 1, 0}, {1, 2}}, {1, {1, 0, 1}, {1, 3}}, {1, {0, 1, 1}, {2, 3}},
    {1, {2, 0, 0}, {1, 2}}, {1, {2, 0, 0}, {1, 3}}, {1, {2, 0, 0}, {2, 3}},
    {1, {0, 2, 0}, {1, 2}}, {1, {0, 2, 0}, {1, 3}}, {1, {0, 2, 0}, {2, 3}},
    {1, {0, 0, 2}, {1, 2}}, {1, {0, 0, 2}, {1, 3}}, {1, {0, 0, 2}, {2, 3}},
};
const std::vector<TermSpec> kIllColon = {
    {1, {0, 0, 1}, {1, 2}}, {1, {0, 0, 1}, {1, 3}}, {1, {0, 0, 1}, {2, 3}},
    {1, {1, 1, 0}, {1, 2}}, {1, {1, 0, 0}, {1, 3}}, {1, {0, 1, 0}, {2, 3}},
};
const std::vector<TermSpec> kObstrBasis = {
    {1, {3, 0}, {1, 2}}, {1, {2, 1}, {1, 2}}, {1, {1, 2}, {1, 2}}, {1, {0, 3}, {1, 2}}};
const std::vector<TermSpec> kBiCycle = {{1, {0, 1, 1, 1}, {1, 3, 4}}, {-1, {1, 0, 1, 1}, {2, 3, 4}}};
const std::vector<TermSpec> kTriChain = {
    {1, {1, 0, 1, 1}, {1, 2, 4}}, {-1, {1, 1, 0, 1}, {1, 3, 4}}, {1, {2, 0, 0, 1}, {2, 3, 4}}};
const std::vector<TermSpec> kInterCycle = {{1, {1, 0, 1, 1}, {1, 2, 4}}, {-1, {1, 1, 0, 1}, {1, 3, 4}}};
const TermSpec kInterMonomial = {1, {2, 0, 0, 1}, {2, 3, 4}};
const std::vector<TermSpec> kFourCycle = {
    {1, {0, 0, 1, 1, 0}, {1, 2, 5}}, {-1, {0, 1, 0, 1, 0}, {1, 3, 5}}, {1, {1, 0, 1, 0, 0}, {2, 4, 5}}};
const std::vector<TermSpec> kFiveCycle = {{1, {0, 0, 1, 1, 1, 0}, {1, 2, 6}},
                                          {-1, {0, 1, 0, 1, 1, 0}, {1, 3, 6}},
                                          {1, {1, 0, 1, 0, 1, 0}, {2, 4, 6}},
                                          {-1, {1, 1, 0, 1, 0, 0}, {3, 5, 6}}};

void reproduce_ill(Checks& c) {
  const auto I = example_ideal("n=3; pborel(x3^3; 2)");
  c.text("ideal equals m*m^[2]", "yes", yes(I == example_ideal("n=3; (x1,x2,x3)*(x1,x2,x3)[2]")));
  for (const auto& f : three_fields()) {
    c.equal<std::size_t>("beta_{2,4} over " + f.name(), 12, betti_table(I, f).get(2, 4));
  }
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto listed = build_elements(K, 2, kIllBasis);
  std::size_t cycles = 0;
  for (const auto& t : kIllBasis) {
    cycles += K.is_monomial_cycle(Monomial(t.u), IndexSubset::from_indices(t.sigma)) ? 1 : 0;
  }
  c.equal<std::size_t>("listed elements that are monomial cycles", 12, cycles);
  for (const auto& f : three_fields()) {
    const KoszulComplex Kf(I, f);
    const auto v = verify_basis(I, build_elements(Kf, 2, kIllBasis), 2, f, betti_table(I, f).total(2));
    c.text("listed basis verified over " + f.name(), "ok", v.ok ? "ok" : v.failed_check + ": " + v.detail);
  }
  c.guarded("layered basis of the factorization", [&] {
    std::vector<KoszulChain> chains;
    for (const auto& e : ah_basis(principal_p_borel(Monomial({0, 0, 3}), 2), 2)) chains.push_back(e.chain(K));
    c.text("layered basis B_2 equals the listed set", join(element_keys(listed)), join(element_keys(chains)));
  });
  c.guarded("lifting", [&] {
    const auto shape = detect_shape(I, 2);
    if (!shape) throw InapplicableError("ideal not recognized as x_{n-1}^gamma x_n^alpha");
    const auto lift = lift_monomial_basis(*shape, FieldSpec::rationals());
    const auto colon = colon_monomial(I, Monomial::variable(3, 3));
    std::optional<LiftLayer> layer;
    for (const auto& L : lift.layers) {
      if (L.ideal == colon) layer = L;
    }
    c.text("lifting visits (I : x3)", "yes", yes(layer.has_value()));
    if (layer) {
      c.text("T_2(I : x3)", join(element_keys(build_elements(K, 2, kIllColon))),
             join(element_keys(layer->basis[2])));
    }
    c.text("lifted basis of H_2", join(element_keys(listed)), join(element_keys(lift.basis[2])));
  });
}

void reproduce_obstr(Checks& c) {
  const auto I = example_ideal("n=2; (x1,x2)^4");
  for (const auto& f : three_fields()) {
    c.equal<std::size_t>("beta_{2,5} over " + f.name(), 4, betti_table(I, f).get(2, 5));
    const KoszulComplex Kf(I, f);
    const auto v = verify_basis(I, build_elements(Kf, 2, kObstrBasis), 2, f, betti_table(I, f).total(2));
    c.text("listed basis verified over " + f.name(), "ok", v.ok ? "ok" : v.failed_check + ": " + v.detail);
  }
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto bad = K.element(Monomial({1, 1}), IndexSubset{1, 2});
  c.text("x1*x2*e12 is a cycle", "no", yes(K.is_cycle(bad)));
  PBorelFactorization F(2, 2);
  F.set_alpha(2, 0, 4);
  std::string outcome = "accepted";
  try {
    (void)ah_basis(F, 2);
  } catch (const InapplicableError& e) {
    outcome = std::string(e.what()).find("digit bound") != std::string::npos ? "rejected: digit bound"
                                                                             : e.what();
  }
  c.text("layered basis with exponent 4 at p=2", "rejected: digit bound", outcome);
}

const char* kBiIdeal = "n=4; (x1,x2)*(x1,x2,x3,x4)[2]";

void reproduce_bi(Checks& c) {
  const auto I = example_ideal(kBiIdeal);
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = build(K, 3, kBiCycle);
  c.text("z is a cycle", "yes", yes(K.is_cycle(z)));
  const Strand st(K, 3, *z.multidegree());
  c.text("z is not a boundary", "yes", yes(!st.in_boundary(z)));
  const auto s = search_min_length_strand(K, 3, *z.multidegree(), kMaxSearchLength);
  c.text("minimal spanning length of the strand", "2",
         s.min_length ? std::to_string(*s.min_length) : to_string(s.status));
  c.text("minimal class length of z", "2", length_text(min_class_length(K, z, kMaxSearchLength)));
  std::size_t shared = 0;
  std::size_t monomial = 0;
  for (const auto& [u, sigma] : st.basis()) {
    if (!K.is_monomial_cycle(u, sigma)) continue;
    ++monomial;
    const auto m = K.element(u, sigma);
    if (st.class_rank({m}) == 1 && st.class_rank({z, m}) == 1) ++shared;
  }
  c.equal<std::size_t>("monomial cycles sharing the class of z (" + std::to_string(monomial) + " in the strand)", 0,
                       shared);
}

void reproduce_tri(Checks& c) {
  const auto I = example_ideal(kBiIdeal);
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = build(K, 3, kTriChain);
  c.text("chain is a cycle", "yes", yes(K.is_cycle(z)));
  c.guarded("top degree reduction", [&] {
    const auto r = reduce_top_degree(K, z);
    c.text("reduced chain", "0", r.reduced.is_zero() ? "0" : r.reduced.to_string());
  });
  const Strand st(K, 3, *z.multidegree());
  c.text("chain is a boundary", "yes", yes(st.in_boundary(z)));
}

void reproduce_inter(Checks& c) {
  const auto I = example_ideal("n=4; pborel(x3*x4^2; 2)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = build(K, 3, kInterCycle);
  const auto m = build(K, 3, {kInterMonomial});
  c.text("z is a cycle", "yes", yes(K.is_cycle(z)));
  c.text("x1^2*x4*e234 is a monomial cycle", "yes",
         yes(K.is_monomial_cycle(Monomial(kInterMonomial.u), IndexSubset{2, 3, 4})));
  const Strand st(K, 3, *z.multidegree());
  c.text("z is homologous to x1^2*x4*e234 up to sign", "yes",
         yes(st.same_class(z, m) || st.same_class(z, -m)));
  c.guarded("reduction", [&] {
    const auto r = reduce_h3_principal_pborel(K, 2, z);
    std::set<std::string> comps;
    for (const auto& x : r.companions) comps.insert(element_key(x));
    c.text("reduction attaches", "{" + element_key(m) + "}", join(comps));
  });
}

void reproduce_four(Checks& c) {
  const auto I = example_ideal("n=5; (x3*x4*x5, x2*x4*x5, x1*x2*x4, x1*x2*x3, x1*x3*x5)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = build(K, 3, kFourCycle);
  c.text("z is a cycle", "yes", yes(K.is_cycle(z)));
  c.equal<std::size_t>("monomial elements in the strand (1,1,1,1,1)", 10,
                       Strand(K, 3, Monomial({1, 1, 1, 1, 1})).dimension());
  c.text("minimal class length of z", "3", length_text(min_class_length(K, z, kMaxSearchLength)));
}

void reproduce_five(Checks& c) {
  const auto I = example_ideal(
      "n=6; (x3*x4*x5*x6, x2*x4*x5*x6, x1*x2*x4*x6, x1*x2*x3*x4, x1*x2*x3*x5, x1*x3*x5*x6)");
  const KoszulComplex K(I, FieldSpec::rationals());
  const auto z = build(K, 3, kFiveCycle);
  c.text("z is a cycle", "yes", yes(K.is_cycle(z)));
  c.text("minimal class length of z", "4", length_text(min_class_length(K, z, kMaxSearchLength)));
}

}  // namespace

std::vector<std::string> example_names() { return {"inter", "bi", "tri", "four", "five", "obstr", "ill"}; }

ReproResult reproduce(const std::string& example) {
  static const std::map<std::string, void (*)(Checks&)> table = {
      {"inter", reproduce_inter}, {"bi", reproduce_bi},       {"tri", reproduce_tri},
      {"four", reproduce_four},   {"five", reproduce_five},   {"obstr", reproduce_obstr},
      {"ill", reproduce_ill}};
  const auto it = table.find(example);
  if (it == table.end()) throw std::invalid_argument("unknown example '" + example + "'");
  ReproResult r;
  r.example = example;
  Checks c(r);
  c.guarded(example, [&] { it->second(c); });
  return r;
}

}  // namespace koszul
