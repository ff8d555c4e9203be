#include "koszul/ah_basis.hpp"

#include <map>
#include <sstream>

#include "koszul/betti.hpp"
#include "koszul/error.hpp"

namespace koszul {

std::vector<AHBasisElement> c_basis(std::size_t num_vars, std::uint64_t p,
                                    const std::vector<CasLayer>& layers, std::size_t i) {
  require_prime(p);
  if (i == 0 || i > num_vars) return {};
  for (std::size_t t = 0; t < layers.size(); ++t) {
    if (layers[t].gamma == 0) throw std::invalid_argument("layer exponents must be positive");
    if (t > 0 && layers[t].j <= layers[t - 1].j) {
      throw std::invalid_argument("layer indices must be strictly increasing");
    }
  }
  const std::size_t n = num_vars;
  const MonomialIdeal m = MonomialIdeal::maximal(n);
  std::vector<AHBasisElement> out;
  const std::size_t last = i == 1 ? std::min<std::size_t>(layers.size(), 1) : layers.size();
  for (std::size_t t = 0; t < last; ++t) {
    const auto q = ipow(p, layers[t].j);
    MonomialIdeal upper = MonomialIdeal::unit(n);
    for (std::size_t r = t + 1; r < layers.size(); ++r) {
      upper = product(upper, power(frobenius_power(m, static_cast<Exponent>(ipow(p, layers[r].j))),
                                   layers[r].gamma));
    }
    for (const auto& w : upper.gens()) {
      for (const auto& v : monomials_of_degree(n, layers[t].gamma)) {
        const std::size_t mv = *v.max_index();
        const Monomial vp = v.div_var(mv);
        // sigma ranges over i-subsets with maximum mv.
        if (mv < i) continue;
        std::vector<std::size_t> pos(i - 1);
        for (std::size_t k = 0; k + 1 < i; ++k) pos[k] = k + 1;
        while (true) {
          std::vector<std::size_t> idx(pos);
          idx.push_back(mv);
          const IndexSubset sigma = IndexSubset::from_indices(idx);
          const Monomial xs = sigma.to_monomial(n);
          Monomial u = w * vp.frobenius(static_cast<Exponent>(q)) *
                       xs.pow(static_cast<Exponent>(q - 1));
          out.push_back({layers[t].j, q, w, v, vp, sigma, std::move(u)});
          std::size_t k = i - 1;
          while (k > 0 && pos[k - 1] == mv - 1 - (i - 1 - k)) --k;
          if (k == 0) break;
          ++pos[k - 1];
          for (std::size_t l = k; l < i - 1; ++l) pos[l] = pos[l - 1] + 1;
        }
      }
    }
  }
  return out;
}

std::vector<CasLayer> full_layers(const PBorelFactorization& F) {
  if (!F.only_full_factors()) {
    throw InapplicableError("factorization has factors other than powers of Frobenius powers of m");
  }
  std::vector<CasLayer> layers;
  for (std::size_t j = 0; j < F.layers(); ++j) {
    const auto a = F.alpha(F.num_vars(), j);
    if (a != 0) layers.push_back({j, a});
  }
  return layers;
}

std::vector<AHBasisElement> ah_basis(const PBorelFactorization& F, std::size_t i) {
  const auto layers = full_layers(F);
  for (const auto& l : layers) {
    if (l.gamma >= F.p()) {
      std::ostringstream os;
      os << "digit bound violated: exponent " << l.gamma << " at layer " << l.j << " is not below p = "
         << F.p() << "; the monomial basis construction needs every layer exponent below p";
      throw InapplicableError(os.str());
    }
  }
  return c_basis(F.num_vars(), F.p(), layers, i);
}

BasisVerification verify_basis(const MonomialIdeal& I, const std::vector<KoszulChain>& candidates,
                               std::size_t i, const FieldSpec& field,
                               std::optional<std::size_t> total_betti) {
  BasisVerification out;
  out.candidates = candidates.size();
  const KoszulComplex K(I, field);
  std::map<Monomial, std::vector<KoszulChain>, bool (*)(const Monomial&, const Monomial&)> groups(
      [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
  for (const auto& z : candidates) {
    if (z.degree() != i || z.is_zero() || !K.is_cycle(z)) {
      out.ok = false;
      out.failed_check = "cycle";
      out.detail = z.to_string() + " is not a nonzero cycle of degree " + std::to_string(i);
      return out;
    }
    const auto a = z.multidegree();
    if (!a) {
      out.ok = false;
      out.failed_check = "multigraded";
      out.detail = z.to_string() + " is not multigraded";
      return out;
    }
    groups[*a].push_back(z);
  }
  for (const auto& [a, zs] : groups) {
    const Strand s(K, i, a);
    if (s.class_rank(zs) != zs.size()) {
      out.ok = false;
      out.failed_check = "independence";
      out.detail = "classes at multidegree " + a.to_string() + " are dependent";
      return out;
    }
  }
  if (total_betti) {
    out.betti = *total_betti;
  } else {
    for (const auto& e : multigraded_betti(I, field)) {
      if (e.i == i) out.betti += e.dim;
    }
  }
  if (out.betti != candidates.size()) {
    out.ok = false;
    out.failed_check = "count";
    out.detail = std::to_string(candidates.size()) + " candidates for a homology of dimension " +
                 std::to_string(out.betti);
  }
  return out;
}

}  // namespace koszul
