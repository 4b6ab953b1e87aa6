#include "hh/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hh {

bool Permutation::is_valid() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

HHVertex apply_perm(const FamilyParams& p, const Permutation& sigma, const HHVertex& v) {
  if (sigma.degree() != p.n)
    throw std::invalid_argument("apply_perm: permutation degree != n");
  Mask t = 0;
  for (int e : mask_elements(v.tail)) t = with_element(t, sigma(e));
  return {sigma(v.head), t};
}

std::vector<int> vertex_permutation(const FamilyParams& p, const Permutation& sigma) {
  auto verts = hh_vertices(p);
  std::vector<int> out(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    out[i] = hh_index(p, apply_perm(p, sigma, verts[i]));
  return out;
}

std::vector<std::vector<int>> sn_vertex_generators(const FamilyParams& p) {
  Permutation swap12, cycle;
  swap12.images.resize(p.n);
  cycle.images.resize(p.n);
  std::iota(swap12.images.begin(), swap12.images.end(), 1);
  if (p.n >= 2) std::swap(swap12.images[0], swap12.images[1]);
  for (int e = 1; e <= p.n; ++e) cycle.images[e - 1] = e % p.n + 1;
  return {vertex_permutation(p, swap12), vertex_permutation(p, cycle)};
}

std::vector<std::vector<int>> generate_group(const std::vector<std::vector<int>>& generators,
                                             long long cap) {
  if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
  const size_t n = generators.front().size();
  for (const auto& gen : generators)
    if (gen.size() != n)
      throw std::invalid_argument("generate_group: mixed permutation degrees");
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, bool> seen;  // value: not yet expanded
  seen.emplace(id, true);
  bool more = true;
  while (more) {
    more = false;
    std::vector<std::vector<int>> batch;
    for (auto& [perm, fresh] : seen)
      if (fresh) {
        fresh = false;
        batch.push_back(perm);
      }
    for (const auto& base : batch)
      for (const auto& gen : generators) {
        std::vector<int> h(n);
        for (size_t i = 0; i < n; ++i) h[i] = gen[base[i]];
        if (seen.emplace(std::move(h), true).second) more = true;
      }
    if (static_cast<long long>(seen.size()) > cap)
      throw std::runtime_error("generate_group: group cap exceeded");
  }
  std::vector<std::vector<int>> out;
  out.reserve(seen.size());
  for (const auto& [perm, fresh] : seen) out.push_back(perm);
  return out;
}

bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (auto [u, v] : g.edges())
    if (!g.adjacent(perm[u], perm[v])) return false;
  return true;
}

namespace {

// Backtracking enumeration of all adjacency-preserving bijections with
// forward checking: after assigning v -> u, the candidate set of every
// unassigned w shrinks to neighbors (resp. non-neighbors) of u.
class AutSearch {
 public:
  AutSearch(const Graph& g, std::chrono::milliseconds budget)
      : g_(g),
        n_(g.vertex_count()),
        deadline_(std::chrono::steady_clock::now() + budget) {
    nonadj_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      Bitset non(n_);
      non.fill_first(n_);
      non -= g.neighbors(v);
      non.reset(v);
      nonadj_.push_back(non);
    }
  }

  AutResult run() {
    std::vector<Bitset> cand;
    cand.reserve(n_);
    std::vector<int> degs(n_);
    for (int v = 0; v < n_; ++v) degs[v] = g_.degree(v);
    for (int v = 0; v < n_; ++v) {
      Bitset c(n_);
      for (int u = 0; u < n_; ++u)
        if (degs[u] == degs[v]) c.set(u);
      cand.push_back(c);
    }
    assigned_.assign(n_, -1);
    extend(cand, 0);
    return {static_cast<long long>(elements_.size()), !aborted_,
            aborted_ ? std::vector<std::vector<int>>{} : elements_};
  }

 private:
  bool time_up() {
    if (aborted_) return true;
    if ((++ticks_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)
      aborted_ = true;
    return aborted_;
  }

  void extend(const std::vector<Bitset>& cand, int depth) {
    if (time_up()) return;
    if (depth == n_) {
      elements_.push_back(assigned_);
      return;
    }
    // most constrained unassigned vertex
    int vbest = -1, cbest = n_ + 1;
    for (int v = 0; v < n_; ++v) {
      if (assigned_[v] >= 0) continue;
      int c = cand[v].count();
      if (c == 0) return;
      if (c < cbest) {
        cbest = c;
        vbest = v;
      }
    }
    std::vector<int> options = cand[vbest].to_vector();
    for (int u : options) {
      if (aborted_) return;
      std::vector<Bitset> next = cand;
      bool ok = true;
      for (int w = 0; w < n_ && ok; ++w) {
        if (assigned_[w] >= 0 || w == vbest) continue;
        if (g_.adjacent(vbest, w))
          next[w] &= g_.neighbors(u);
        else
          next[w] &= nonadj_[u];
        next[w].reset(u);
        if (next[w].none()) ok = false;
      }
      if (!ok) continue;
      assigned_[vbest] = u;
      extend(next, depth + 1);
      assigned_[vbest] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Bitset> nonadj_;
  std::vector<int> assigned_;
  std::vector<std::vector<int>> elements_;
  std::chrono::steady_clock::time_point deadline_;
  uint64_t ticks_ = 0;
  bool aborted_ = false;
};

}  // namespace

AutResult aut_group(const Graph& g, std::chrono::milliseconds budget) {
  AutSearch search(g, budget);
  return search.run();
}

long long aut_order(const Graph& g, std::chrono::milliseconds budget) {
  return aut_group(g, budget).order;
}

PairClass pair_classify(const FamilyParams& p, const HHVertex& u, const HHVertex& v) {
  if (u == v) throw std::invalid_argument("pair_classify: u == v");
  if (u.tail == v.tail && u.head != v.head) return PairClass::TAIL_TYPE;
  if (u.head == v.head && popcount_mask(u.tail & v.tail) == p.r - 1)
    return PairClass::HEAD_TYPE;
  return PairClass::OTHER;
}

std::pair<long long, long long> common_count_formulas(const FamilyParams& p) {
  if (p.r < 2 || p.n < 2 * p.r + 1)
    throw std::invalid_argument("common_count_formulas: requires r >= 2, n >= 2r+1");
  return {p.r * binomial(p.n - p.r - 2, p.r - 2),
          (p.r - 1) * binomial(p.n - p.r - 2, p.r - 1)};
}

bool structural_same_tail(const Graph& g, const FamilyParams& p, int u, int v) {
  if (p.n < 2 * p.r + 1)
    throw std::invalid_argument("structural_same_tail: requires n >= 2r+1");
  if (u == v) throw std::invalid_argument("structural_same_tail: u == v");
  const int n = g.vertex_count();
  Bitset common = g.neighbors(u) & g.neighbors(v);
  if (common.none()) return false;

  // A vertex other than u,v adjacent to all common neighbors rules out a
  // tail-type pair.
  for (int s = 0; s < n; ++s) {
    if (s == u || s == v) continue;
    if (common.is_subset_of(g.neighbors(s))) return false;
  }

  if (p.n != 3 * p.r)
    return common.count() == common_count_formulas(p).first;

  if (p.r >= 3) {
    // n = 3r, r >= 3: a tail-type pair is the one where every vertex
    // adjacent to a neighbor of u and a neighbor of v also touches a
    // common neighbor.
    for (int c = 0; c < n; ++c) {
      const Bitset& nc = g.neighbors(c);
      if (!nc.intersects(g.neighbors(u)) || !nc.intersects(g.neighbors(v))) continue;
      if (!nc.intersects(common)) return false;
    }
    return true;
  }

  // n = 3r, r = 2: a tail-type pair is the one where every vertex adjacent
  // to an exclusive neighbor of u and an exclusive neighbor of v avoids
  // all common neighbors.
  Bitset exu = g.neighbors(u) - g.neighbors(v);
  Bitset exv = g.neighbors(v) - g.neighbors(u);
  for (int c = 0; c < n; ++c) {
    const Bitset& nc = g.neighbors(c);
    if (!nc.intersects(exu) || !nc.intersects(exv)) continue;
    if (nc.intersects(common)) return false;
  }
  return true;
}

bool tail_preservation_check(const Graph& g, const std::vector<std::vector<int>>& autos) {
  if (!g.has_labels())
    throw std::invalid_argument("tail_preservation_check: graph has no labels");
  const int n = g.vertex_count();
  std::vector<Mask> tails(n);
  for (int v = 0; v < n; ++v) tails[v] = hh_parse_label(g.label(v)).tail;

  std::map<Mask, std::vector<int>> by_tail;
  for (int v = 0; v < n; ++v) by_tail[tails[v]].push_back(v);

  for (const auto& perm : autos) {
    if (!is_graph_automorphism(g, perm))
      throw std::invalid_argument("tail_preservation_check: non-automorphism input");
    for (const auto& [tail, verts] : by_tail)
      for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
          if (tails[perm[verts[i]]] != tails[perm[verts[j]]]) return false;
  }
  return true;
}

}  // namespace hh
