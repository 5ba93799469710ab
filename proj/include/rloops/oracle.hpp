#pragma once

// Brute-force reference computations. Nothing here uses the closure
// machinery of the congruence or center modules: relations are boolean
// matrices, closures are naive fixpoints and searches are exhaustive. Meant
// for small orders only.

#include <cstddef>
#include <optional>
#include <vector>

#include "rloops/congruence.hpp"
#include "rloops/right_loop.hpp"

namespace rloops::oracle {

/// Every partition of {0..n-1} as a restricted growth string.
std::vector<std::vector<Elem>> all_partitions(std::size_t n);

/// x ~ u and y ~ v imply x∘y ~ u∘v, checked over all quadruples.
bool is_congruence_naive(const RightLoop& s, const std::vector<Elem>& labels);

/// All congruences, filtered from all partitions.
std::vector<Congruence> all_congruences_naive(const RightLoop& s);

/// Quotient checks evaluated directly on classes.
bool quotient_is_group(const RightLoop& s, const Congruence& c);
bool quotient_is_abelian_group(const RightLoop& s, const Congruence& c);

/// The congruence contained in every congruence with the property, if it has
/// the property itself; nullopt when no minimum exists.
std::optional<Congruence> minimum_group_congruence(const RightLoop& s);
std::optional<Congruence> minimum_abelian_congruence(const RightLoop& s);

struct CenteringSearch {
  bool exists = false;
  /// Labels over the lexicographically ordered pairs of β of the first
  /// centering congruence found.
  std::optional<std::vector<Elem>> witness;
  std::size_t candidates = 0;
};

/// Searches all congruences on β (as an algebra of pairs) for one that
/// satisfies the five centering conditions with respect to γ.
CenteringSearch find_centering_congruence(const RightLoop& s, const Congruence& beta, const Congruence& gamma);

}  // namespace rloops::oracle
