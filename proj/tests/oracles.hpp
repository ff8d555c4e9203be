// Brute-force reference computations used as test oracles. Nothing here
// calls the library's algorithms beyond plain data types.
#ifndef KOSZUL_TEST_ORACLES_HPP
#define KOSZUL_TEST_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline bool member(const std::vector<Exps>& gens, const Exps& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, u); });
}

inline std::vector<Exps> minimal(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// True when binom(b, a) is nonzero mod p, by direct binomial coefficients.
inline bool binomial_nonzero_mod(std::uint64_t b, std::uint64_t a, std::uint64_t p) {
  if (a > b) return false;
  std::vector<std::uint64_t> row(b + 1, 0);
  row[0] = 1;
  for (std::uint64_t r = 1; r <= b; ++r) {
    for (std::uint64_t k = r; k > 0; --k) row[k] = (row[k] + row[k - 1]) % p;
  }
  return row[a] % p != 0;
}

// Closure of {u} under x_j^t (w / x_i^t) for j < i and binom(nu_i(w), t) != 0 mod p.
inline std::set<Exps> pborel_closure(const Exps& u, std::uint64_t p) {
  std::set<Exps> seen = {u};
  std::vector<Exps> stack = {u};
  while (!stack.empty()) {
    const auto w = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (int t = 1; t <= w[i]; ++t) {
        if (!binomial_nonzero_mod(static_cast<std::uint64_t>(w[i]), static_cast<std::uint64_t>(t), p)) continue;
        for (std::size_t j = 0; j < i; ++j) {
          auto v = w;
          v[i] -= t;
          v[j] += t;
          if (seen.insert(v).second) stack.push_back(v);
        }
      }
    }
  }
  return seen;
}

// Dense rank over Q (p == 0) or GF(p).
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m, std::uint64_t p) {
  auto reduce = [&](mpq_class& x) {
    if (p == 0) return;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class pm = static_cast<unsigned long>(p);
    num %= pm;
    if (num < 0) num += pm;
    den %= pm;
    if (den < 0) den += pm;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
    x = mpq_class(mpz_class(num * inv % pm));
  };
  for (auto& row : m) {
    for (auto& x : row) reduce(x);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      reduce(f);
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] -= f * m[rank][k];
        reduce(m[r][k]);
      }
    }
    ++rank;
  }
  return rank;
}

// dim H_i(x; S/I)_a from the Koszul strand, built from scratch.
inline std::size_t koszul_homology_dim(const std::vector<Exps>& gens, const Exps& a, int i,
                                       std::uint64_t p) {
  const int n = static_cast<int>(a.size());
  auto elements = [&](int deg) {
    std::vector<std::pair<Exps, unsigned>> out;
    if (deg < 0 || deg > n) return out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != deg) continue;
      Exps u = a;
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        if (mask >> k & 1u) ok = ok && --u[k] >= 0;
      }
      if (ok && !member(gens, u)) out.push_back({u, mask});
    }
    return out;
  };
  auto matrix = [&](int deg) {
    const auto src = elements(deg);
    const auto dst = elements(deg - 1);
    std::vector<std::vector<mpq_class>> m(dst.size(), std::vector<mpq_class>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int position = 0;
      for (int k = 0; k < n; ++k) {
        if (!(src[c].second >> k & 1u)) continue;
        ++position;
        Exps u = src[c].first;
        ++u[k];
        const unsigned mask = src[c].second & ~(1u << k);
        for (std::size_t r = 0; r < dst.size(); ++r) {
          if (dst[r].second == mask && dst[r].first == u) m[r][c] = position % 2 ? 1 : -1;
        }
      }
    }
    return std::make_pair(m, src.size());
  };
  const auto [d_i, dim_i] = matrix(i);
  const auto [d_up, dim_up] = matrix(i + 1);
  (void)dim_up;
  const std::size_t r_i = d_i.empty() ? 0 : dense_rank(d_i, p);
  const std::size_t r_up = d_up.empty() ? 0 : dense_rank(d_up, p);
  return dim_i - r_i - r_up;
}

// Graded Betti numbers of S/I: (i, j) -> dim, summing multidegrees in the box
// below the lcm of the generators.
inline std::map<std::pair<int, int>, std::size_t> betti(const std::vector<Exps>& gens, int n,
                                                        std::uint64_t p) {
  Exps top(n, 0);
  for (const auto& g : gens) {
    for (int k = 0; k < n; ++k) top[k] = std::max(top[k], g[k]);
  }
  std::map<std::pair<int, int>, std::size_t> out;
  Exps a(n, 0);
  while (true) {
    int deg = 0;
    for (int x : a) deg += x;
    for (int i = 0; i <= n; ++i) {
      const auto d = koszul_homology_dim(gens, a, i, p);
      if (d) out[{i, deg}] += d;
    }
    int k = 0;
    while (k < n && a[k] == top[k]) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  return out;
}

}  // namespace oracle

#endif
