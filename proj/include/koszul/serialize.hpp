#ifndef KOSZUL_SERIALIZE_HPP
#define KOSZUL_SERIALIZE_HPP

#include "json.hpp"

#include "koszul/betti.hpp"
#include "koszul/cycles.hpp"
#include "koszul/ideal.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/min_length.hpp"
#include "koszul/pborel.hpp"

namespace koszul {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Monomial& u);
nlohmann::json to_json(const MonomialIdeal& I);
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const KoszulChain& z);
nlohmann::json to_json(const CycleCertificate& c);
nlohmann::json to_json(const StrandSearchReport& r);
nlohmann::json to_json(const BorelChainReport& r);
nlohmann::json to_json(const PBorelFactorization& f);

MonomialIdeal ideal_from_json(const nlohmann::json& j);
/// Terms are read in the given complex; the degree is taken from the first
/// term (or the "degree" field when present).
KoszulChain chain_from_json(const nlohmann::json& j, const KoszulComplex& K);

/// Macaulay-style triangle with rows j - i and columns i.
std::string render_betti_text(const BettiTable& t);

}  // namespace koszul

#endif
