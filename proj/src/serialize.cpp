#include "koszul/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "koszul/error.hpp"

namespace koszul {

using nlohmann::json;

json to_json(const Monomial& u) {
  json a = json::array();
  for (auto e : u.exps()) a.push_back(e);
  return a;
}

json to_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(to_json(g));
  return {{"schema_version", kSchemaVersion}, {"n", I.num_vars()}, {"gens", gens}};
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, dim] : t.entries()) {
    entries.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
  }
  return {{"schema_version", kSchemaVersion}, {"field", t.field().name()}, {"entries", entries}};
}

json to_json(const KoszulChain& z) {
  json terms = json::array();
  for (const auto& t : z.terms()) {
    json sigma = json::array();
    for (auto k : t.sigma.indices()) sigma.push_back(k);
    terms.push_back({{"coeff", t.coeff.get_str()}, {"u", to_json(t.u)}, {"sigma", sigma}});
  }
  return {{"schema_version", kSchemaVersion},
          {"degree", z.degree()},
          {"field", z.field().name()},
          {"terms", terms}};
}

json to_json(const CycleCertificate& c) {
  return {{"schema_version", kSchemaVersion},
          {"input", to_json(c.input)},
          {"representative", to_json(c.representative)},
          {"witness", to_json(c.witness)}};
}

json to_json(const StrandSearchReport& r) {
  json w = json::array();
  for (const auto& z : r.witnesses) w.push_back(to_json(z));
  json out = {{"schema_version", kSchemaVersion},
              {"multidegree", to_json(r.a)},
              {"degree", r.degree},
              {"dimension", r.dimension},
              {"betti", r.betti},
              {"status", to_string(r.status)},
              {"witnesses", w}};
  out["min_length"] = r.min_length ? json(*r.min_length) : json(nullptr);
  return out;
}

json to_json(const BorelChainReport& r) {
  json stages = json::array();
  for (const auto& s : r.stages) {
    json st = {{"ideal", to_json(s.ideal)},
               {"index", s.index},
               {"restricted", to_json(s.j)},
               {"saturation", to_json(s.j_sat)},
               {"top_dimension", s.top_dimension}};
    st["top_degree"] = s.top_degree ? json(*s.top_degree) : json(nullptr);
    stages.push_back(st);
  }
  return {{"schema_version", kSchemaVersion}, {"stages", stages}};
}

json to_json(const PBorelFactorization& f) {
  json factors = json::array();
  for (std::size_t q = 1; q <= f.num_vars(); ++q) {
    for (std::size_t j = 0; j < f.layers(); ++j) {
      if (const auto a = f.alpha(q, j); a != 0) {
        factors.push_back({{"q", q}, {"j", j}, {"alpha", a}});
      }
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"n", f.num_vars()},
          {"p", f.p()},
          {"factors", factors},
          {"ideal", to_json(f.expand())}};
}

MonomialIdeal ideal_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    auto e = g.get<std::vector<Exponent>>();
    if (e.size() != n) throw DimensionMismatch("generator length differs from n");
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

KoszulChain chain_from_json(const json& j, const KoszulComplex& K) {
  std::vector<KoszulTerm> terms;
  std::optional<std::size_t> degree;
  if (j.contains("degree")) degree = j.at("degree").get<std::size_t>();
  for (const auto& t : j.at("terms")) {
    auto e = t.at("u").get<std::vector<Exponent>>();
    if (e.size() != K.num_vars()) throw DimensionMismatch("monomial length differs from n");
    const auto idx = t.at("sigma").get<std::vector<std::size_t>>();
    const IndexSubset sigma = IndexSubset::from_indices(idx);
    if (!degree) degree = sigma.size();
    terms.push_back({Scalar(t.at("coeff").get<std::string>()), Monomial(std::move(e)), sigma});
  }
  return K.chain(degree.value_or(0), std::move(terms));
}

std::string render_betti_text(const BettiTable& t) {
  std::ostringstream os;
  if (t.empty()) return "(zero)\n";
  const auto pd = t.projective_dimension();
  const auto reg = t.regularity();
  std::int64_t low = 0;
  for (const auto& [key, dim] : t.entries()) {
    low = std::min(low, static_cast<std::int64_t>(key.second) - static_cast<std::int64_t>(key.first));
  }
  os << "field " << t.field().name() << "\n      ";
  for (std::size_t i = 0; i <= pd; ++i) os << std::setw(6) << i;
  os << "\n";
  for (std::int64_t r = low; r <= reg; ++r) {
    os << std::setw(4) << r << ": ";
    for (std::size_t i = 0; i <= pd; ++i) {
      const auto j = static_cast<std::int64_t>(i) + r;
      const auto v = j < 0 ? 0 : t.get(i, static_cast<std::uint64_t>(j));
      if (v == 0) {
        os << std::setw(6) << '.';
      } else {
        os << std::setw(6) << v;
      }
    }
    os << "\n";
  }
  os << "total:";
  for (std::size_t i = 0; i <= pd; ++i) os << std::setw(6) << t.total(i);
  os << "\n";
  return os.str();
}

}  // namespace koszul
