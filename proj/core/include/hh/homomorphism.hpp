#ifndef HH_HOMOMORPHISM_HPP
#define HH_HOMOMORPHISM_HPP

#include <utility>
#include <vector>

#include "hh/coloring.hpp"
#include "hh/families.hpp"
#include "hh/graph.hpp"
#include "hh/independence.hpp"

namespace hh {

struct VertexMap {
  std::vector<int> map;  // source index -> target index, total
  bool injective;
};

struct HomCheck {
  bool ok;
  std::pair<int, int> violating_edge{-1, -1};  // first violating source edge
};

// True iff every source edge maps to a target edge.
HomCheck verify_hom(const Graph& source, const Graph& target, const VertexMap& m);

// (h,T) -> h into K_n.
VertexMap head_hom(const FamilyParams& p);

// (h,T) -> T into K(n:r).
VertexMap tail_hom(const FamilyParams& p);

// (h,T) -> (h, T + {n + 1 + color}) into H(n + chi : r+1); c must be a
// proper coloring of H(n:r) with colors 0..chi-1 (relabeled internally to
// the fresh elements {n+1..n+chi}).
VertexMap tail_growth_embed(const FamilyParams& p, const Coloring& c);

// {x1<x2<x3} -> (x2, {x1,x3}) into H(n:2); injective, induced.
VertexMap shift_embed(int n);

// Lifts a subgraph of K(n:r) with max degree < (n-r)/(n-2r) into H(n:r)
// by choosing for each subset-vertex the smallest head common to all of
// its neighbors; isolated vertices get the smallest valid head.
// `subsets[i]` is the r-subset label of vertex i of sub.
VertexMap lift_kneser_subgraph(const FamilyParams& p, const Graph& sub,
                               const std::vector<Mask>& subsets);

// Explicit path from X to Y in K(n:r) of length
// min{2*ceil((r-s)/k), 2*ceil(s/k)+1}, s = |X cap Y|, k = n-2r.
// Ties favor the even-length construction.
std::vector<Mask> kneser_path(int n, int r, Mask x, Mask y);

struct SetValuedMap {
  long long ground_size;       // n' = |G|
  long long image_size;        // r' = |G||s|/|V|
  std::vector<Bitset> images;  // vertex -> r'-subset of group indices
};

// The orbit homomorphism x -> {g : x in g(s)} into K(n':r'); requires s
// independent and the generated group transitive.
SetValuedMap orbit_hom(const Graph& g, const std::vector<std::vector<int>>& generators,
                       const VertexSet& s, long long group_cap = 3628800);

}  // namespace hh

#endif
