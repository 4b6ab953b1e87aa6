#ifndef HH_SUBSETS_HPP
#define HH_SUBSETS_HPP

#include <cstdint>
#include <vector>

namespace hh {

// Subsets of the ground set {1..n} are n-bit masks with bit (e-1) for
// element e, so disjointness is a single AND.
using Mask = uint64_t;

long long binomial(int n, int k);

int popcount_mask(Mask m);
bool element_in(Mask m, int e);          // 1-based element
Mask with_element(Mask m, int e);        // 1-based element
Mask full_mask(int n);

// Elements of the mask as ascending 1-based values.
std::vector<int> mask_elements(Mask m);
Mask mask_from_elements(const std::vector<int>& elems);

// All r-subset masks of {1..n} in colex order (= ascending numeric order).
std::vector<Mask> all_subsets(int n, int r);

// Colex rank of an r-subset mask among all r-subsets, and its inverse.
long long colex_rank(Mask m);
Mask colex_unrank(long long rank, int r);

}  // namespace hh

#endif
