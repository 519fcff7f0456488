#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starpir/index_set.hpp"
#include "starpir/permutation.hpp"

namespace starpir {

/// A permutation group given by generators; the group itself is never
/// materialised.
struct PermutationGroupSpec {
  std::vector<Permutation> generators;

  /// Number of points acted on. Throws ValidationError without generators
  /// or when generator degrees differ.
  std::size_t degree() const;
};

inline constexpr std::size_t kDefaultOrbitLimit = std::size_t{1} << 22;

/// Orbit of a point, in breadth-first discovery order.
std::vector<std::size_t> point_orbit(const PermutationGroupSpec& g, std::size_t point);
bool is_transitive(const PermutationGroupSpec& g);

/// Orbit of a set under the group, in breadth-first discovery order, without
/// duplicates. Throws BudgetExceeded once more than `limit` sets are found.
std::vector<IndexSet> set_orbit(const PermutationGroupSpec& g, const IndexSet& s,
                                std::size_t limit = kDefaultOrbitLimit);

}  // namespace starpir
