#ifndef HH_COLORING_HPP
#define HH_COLORING_HPP

#include <boost/rational.hpp>
#include <chrono>
#include <vector>

#include "hh/families.hpp"
#include "hh/graph.hpp"
#include "hh/independence.hpp"

namespace hh {

using Rational = boost::rational<long long>;

struct Coloring {
  std::vector<int> assignment;  // vertex -> color in [0, color_count)
  int color_count;
};

bool is_proper(const Graph& g, const Coloring& c);

// DSATUR greedy; color_count is an upper bound on chi.
Coloring chi_upper_greedy(const Graph& g);

struct ChiResult {
  int lower;
  int upper;
  Coloring coloring;  // proper coloring with `upper` colors
  bool exact;         // lower == upper and search completed
};

// Exact chromatic number by iterated k-colorability search (DSATUR order,
// new-color symmetry breaking, one vertex pre-colored). On budget
// exhaustion returns the bracket found so far, flagged non-exact.
ChiResult chi_exact(const Graph& g,
                    std::chrono::milliseconds budget = std::chrono::milliseconds(600000));

// The n-2r+2 coloring built from the 3-cell recursion: 2-color H(2r:r),
// then give each new "n in tail" cell a fresh color and the "head n" cell
// color 0.
Coloring constructive_coloring(const FamilyParams& p);

// |V|/alpha in lowest terms; requires a vertex-transitive group witness
// (generators whose closure is vertex transitive on g).
Rational fractional_chromatic(const Graph& g,
                              const std::vector<std::vector<int>>& transitive_generators,
                              long long alpha);

struct FractionalColoring {
  std::vector<std::pair<VertexSet, Rational>> weighted_sets;
  Rational total_weight;
};

// The orbit cover: distinct images of an independent set s under the
// group generated by `generators`, each weighted multiplicity/r' with
// r' = |G||s|/|V|. Covers every vertex with total weight exactly 1.
FractionalColoring orbit_fractional_coloring(const Graph& g,
                                             const std::vector<std::vector<int>>& generators,
                                             const VertexSet& s,
                                             long long group_cap = 3628800);

}  // namespace hh

#endif
