#ifndef HH_AUTOMORPHISM_HPP
#define HH_AUTOMORPHISM_HPP

#include <chrono>
#include <utility>
#include <vector>

#include "hh/families.hpp"
#include "hh/graph.hpp"

namespace hh {

// A permutation of the ground set {1..n}: images[e-1] = sigma(e).
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int e) const { return images.at(e - 1); }
  bool is_valid() const;
};

// Coordinate-wise action (h,T) -> (sigma(h), sigma(T)).
HHVertex apply_perm(const FamilyParams& p, const Permutation& sigma, const HHVertex& v);

// The vertex permutation (on canonical indices) induced by sigma.
std::vector<int> vertex_permutation(const FamilyParams& p, const Permutation& sigma);

// Vertex permutations induced by the transposition (1 2) and the n-cycle;
// together they generate the S_n action on H(n:r).
std::vector<std::vector<int>> sn_vertex_generators(const FamilyParams& p);

// Closure of the given vertex permutations under composition, sorted
// lexicographically. Throws if the group exceeds `cap` elements.
std::vector<std::vector<int>> generate_group(const std::vector<std::vector<int>>& generators,
                                             long long cap = 3628800);

bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm);

struct AutResult {
  long long order;  // exact order, or the count found so far on exhaustion
  bool exact;
  std::vector<std::vector<int>> elements;  // full group when exact
};

// Full automorphism group by backtracking with bit-parallel candidate
// pruning (forward checking on adjacency), most-constrained vertex first.
AutResult aut_group(const Graph& g,
                    std::chrono::milliseconds budget = std::chrono::milliseconds(900000));

long long aut_order(const Graph& g,
                    std::chrono::milliseconds budget = std::chrono::milliseconds(900000));

enum class PairClass { TAIL_TYPE, HEAD_TYPE, OTHER };

// TAIL_TYPE: equal tails, distinct heads. HEAD_TYPE: equal heads, tails
// sharing exactly r-1 elements.
PairClass pair_classify(const FamilyParams& p, const HHVertex& u, const HHVertex& v);

// (tail-type common-neighbor count, head-type common-neighbor count):
// (r*C(n-r-2,r-2), (r-1)*C(n-r-2,r-1)); equal iff n = 3r.
std::pair<long long, long long> common_count_formulas(const FamilyParams& p);

// Label-free tail-type detector: decides from adjacency alone whether
// vertices u and v of H(n:r) have the same tail. Requires n >= 2r+1.
bool structural_same_tail(const Graph& g, const FamilyParams& p, int u, int v);

// True iff every listed automorphism maps tail-type pairs (read from the
// labels of g) to tail-type pairs.
bool tail_preservation_check(const Graph& g, const std::vector<std::vector<int>>& autos);

}  // namespace hh

#endif
