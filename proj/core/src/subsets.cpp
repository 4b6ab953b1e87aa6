#include "hh/subsets.hpp"

#include <bit>
#include <stdexcept>

namespace hh {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int popcount_mask(Mask m) { return std::popcount(m); }

bool element_in(Mask m, int e) { return (m >> (e - 1)) & 1; }

Mask with_element(Mask m, int e) { return m | (Mask{1} << (e - 1)); }

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_elements(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m = with_element(m, e);
  return m;
}

std::vector<Mask> all_subsets(int n, int r) {
  if (n < 0 || r < 0 || n >= 64) throw std::invalid_argument("all_subsets: bad n or r");
  std::vector<Mask> out;
  if (r > n) return out;
  if (r == 0) return {Mask{0}};
  out.reserve(static_cast<size_t>(binomial(n, r)));
  Mask m = (Mask{1} << r) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    Mask c = m & -m;
    Mask rr = m + c;
    m = (((rr ^ m) >> 2) / c) | rr;
  }
  return out;
}

long long colex_rank(Mask m) {
  long long rank = 0;
  int i = 1;
  while (m) {
    int pos = std::countr_zero(m);
    rank += binomial(pos, i);
    ++i;
    m &= m - 1;
  }
  return rank;
}

Mask colex_unrank(long long rank, int r) {
  Mask m = 0;
  for (int i = r; i >= 1; --i) {
    int pos = i - 1;
    while (binomial(pos + 1, i) <= rank) ++pos;
    rank -= binomial(pos, i);
    m |= Mask{1} << pos;
  }
  return m;
}

}  // namespace hh
