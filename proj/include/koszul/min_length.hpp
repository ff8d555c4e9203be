#ifndef KOSZUL_MIN_LENGTH_HPP
#define KOSZUL_MIN_LENGTH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/koszul_complex.hpp"

namespace koszul {

/// Exhaustive searches are refused above these sizes.
inline constexpr std::size_t kMaxSearchDimension = 24;
inline constexpr std::size_t kMaxSearchLength = 4;

enum class SearchStatus { Found, NoneUpToBound, BoundExceeded };

std::string to_string(SearchStatus s);

struct StrandSearchReport {
  Multidegree a;
  std::size_t degree = 0;
  std::size_t dimension = 0;  // dim K_i(a)
  std::size_t betti = 0;
  SearchStatus status = SearchStatus::Found;
  /// Least k such that cycles with at most k terms span the homology.
  std::optional<std::size_t> min_length;
  /// Cycles whose classes form a basis, found in order of increasing length.
  std::vector<KoszulChain> witnesses;
};

/// Searches one strand. k_max must lie in 1..kMaxSearchLength; a strand of
/// dimension above kMaxSearchDimension yields BoundExceeded.
StrandSearchReport search_min_length_strand(const KoszulComplex& K, std::size_t i,
                                            const Multidegree& a, std::size_t k_max);

/// One report per multidegree with nonzero H_i.
std::vector<StrandSearchReport> search_min_length_basis(const MonomialIdeal& I, std::size_t i,
                                                        const FieldSpec& field,
                                                        std::size_t k_max);

struct ClassLengthReport {
  SearchStatus status = SearchStatus::Found;
  /// Fewest terms of a cycle homologous to z (0 if z is a boundary).
  std::optional<std::size_t> length;
  std::optional<KoszulChain> witness;
  std::size_t dimension = 0;
  /// Number of candidate supports examined.
  std::size_t supports_checked = 0;
};

/// Shortest cycle in the class of the multigraded cycle z, searching all
/// supports of at most k_max strand elements.
ClassLengthReport min_class_length(const KoszulComplex& K, const KoszulChain& z,
                                   std::size_t k_max);

}  // namespace koszul

#endif
