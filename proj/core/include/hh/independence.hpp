#ifndef HH_INDEPENDENCE_HPP
#define HH_INDEPENDENCE_HPP

#include <chrono>
#include <utility>
#include <vector>

#include "hh/families.hpp"
#include "hh/graph.hpp"

namespace hh {

using VertexSet = std::vector<int>;  // sorted vertex indices

struct AlphaResult {
  long long alpha;
  VertexSet witness;
  bool optimality_certified;
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

// All vertices of H(n:r) with t in their tail; size r*C(n-1,r).
VertexSet kneser_type_set(const FamilyParams& p, int t);

// All vertices whose head exceeds every tail element; size C(n,r+1).
VertexSet recursive_type_set(const FamilyParams& p);

// The mirror image: head below every tail element; size C(n,r+1).
VertexSet recursive_type_set_low(const FamilyParams& p);

// The best constructed set: the Kneser-type set for n <= r^2+1, otherwise
// the hybrid of head-maximal vertices above r^2 with a Kneser-type set of
// the H(r^2:r) block.
VertexSet best_constructed_set(const FamilyParams& p);

// The hybrid set itself, valid for n >= r^2; equals best_constructed_set
// except at n = r^2, r^2+1 where both regimes tie.
VertexSet hybrid_set(const FamilyParams& p);

// max{|T_n(n)|, |H_n(n)| + alpha'(n-1)} with base alpha'(2r) = |V|/2.
long long alpha_prime(const FamilyParams& p);

// Two disjoint independent sets of hybrid size, the second the image of
// the first under i -> n+1-i. Requires n >= r^2+1.
std::pair<VertexSet, VertexSet> disjoint_pair(const FamilyParams& p);

// Exact maximum independent set via branch and bound: clique-cover
// (greedy matching) upper bound, max-degree branching, bit-parallel
// candidate sets. A seed, when given, must be independent and is used as
// the initial incumbent. On budget exhaustion the result is flagged
// uncertified; the witness is still independent.
AlphaResult alpha_exact(const Graph& g,
                        std::chrono::milliseconds budget = std::chrono::milliseconds(600000),
                        const VertexSet* seed = nullptr);

}  // namespace hh

#endif
