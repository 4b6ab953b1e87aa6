#ifndef HH_STRUCTURE_HPP
#define HH_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "hh/families.hpp"
#include "hh/graph.hpp"

namespace hh {

// Ordered disjoint cover of the vertex set. For the 3-cell partition of
// H(n:r): cell 0 avoids n entirely, cell 1 has n in the tail, cell 2 has
// head n.
struct CellPartition {
  std::vector<std::vector<int>> cells;
};

using QuotientMatrix = std::vector<std::vector<long long>>;

struct QuotientResult {
  bool equitable;
  QuotientMatrix matrix;                // valid iff equitable
  std::pair<int, int> witness{-1, -1};  // same-cell vertex pair with differing counts
};

// Requires n >= r+2 so that all three cells are nonempty.
CellPartition three_cell_partition(const FamilyParams& p);

// Checks equitability and returns the quotient matrix, or the first
// witness pair in canonical vertex order.
QuotientResult quotient_matrix(const Graph& g, const CellPartition& part);

// The arc labels of the 3-cell partition as a matrix; requires n >= 2r+1.
QuotientMatrix expected_quotient_matrix(const FamilyParams& p);

// Orbits of the group generated by the given vertex permutations on
// vertices and on ordered adjacent pairs. Each generator must be an
// automorphism of g.
std::pair<long long, long long> orbit_count(const Graph& g,
                                            const std::vector<std::vector<int>>& generators);

}  // namespace hh

#endif
