#include "hh/independence.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

bool is_independent(const Graph& g, const VertexSet& s) {
  Bitset members(g.vertex_count());
  for (int v : s) {
    g.neighbors(v);  // range check
    members.set(v);
  }
  for (int v : s)
    if (g.neighbors(v).intersects(members)) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  Bitset members(g.vertex_count());
  for (int v : s) members.set(v);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (members.test(v)) continue;
    if (!g.neighbors(v).intersects(members)) return false;
  }
  return true;
}

VertexSet kneser_type_set(const FamilyParams& p, int t) {
  if (t < 1 || t > p.n) throw std::invalid_argument("kneser_type_set: element out of range");
  auto verts = hh_vertices(p);
  VertexSet out;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (element_in(verts[i].tail, t)) out.push_back(i);
  return out;
}

namespace {
int max_element_of(Mask m) { return mask_elements(m).back(); }
int min_element_of(Mask m) { return mask_elements(m).front(); }
}  // namespace

VertexSet recursive_type_set(const FamilyParams& p) {
  auto verts = hh_vertices(p);
  VertexSet out;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].head > max_element_of(verts[i].tail)) out.push_back(i);
  return out;
}

VertexSet recursive_type_set_low(const FamilyParams& p) {
  auto verts = hh_vertices(p);
  VertexSet out;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i].head < min_element_of(verts[i].tail)) out.push_back(i);
  return out;
}

VertexSet hybrid_set(const FamilyParams& p) {
  if (p.n < p.r * p.r)
    throw std::invalid_argument("hybrid_set: requires n >= r^2");
  auto verts = hh_vertices(p);
  const int r2 = p.r * p.r;
  const Mask low = full_mask(r2);
  VertexSet out;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    const auto& v = verts[i];
    bool head_max_high = v.head > r2 && v.head > max_element_of(v.tail);
    bool low_block = v.head <= r2 && (v.tail & ~low) == 0 && element_in(v.tail, 1);
    if (head_max_high || low_block) out.push_back(i);
  }
  return out;
}

VertexSet best_constructed_set(const FamilyParams& p) {
  if (p.r < 2 || p.n < 2 * p.r)
    throw std::invalid_argument("best_constructed_set: requires r >= 2, n >= 2r");
  if (p.n <= p.r * p.r + 1) return kneser_type_set(p, 1);
  return hybrid_set(p);
}

long long alpha_prime(const FamilyParams& p) {
  if (p.r < 2 || p.n < 2 * p.r)
    throw std::invalid_argument("alpha_prime: requires r >= 2, n >= 2r");
  const int r = p.r;
  long long acc = r * binomial(2 * r, r) / 2;  // alpha'(H(2r:r)) = |V|/2
  for (int m = 2 * r + 1; m <= p.n; ++m)
    acc = std::max(r * binomial(m - 1, r), binomial(m - 1, r) + acc);
  return acc;
}

std::pair<VertexSet, VertexSet> disjoint_pair(const FamilyParams& p) {
  if (p.n < p.r * p.r + 1)
    throw std::invalid_argument("disjoint_pair: requires n >= r^2+1");
  auto verts = hh_vertices(p);
  VertexSet plus = hybrid_set(p);
  // sigma(i) = n+1-i, as in the construction.
  VertexSet minus;
  minus.reserve(plus.size());
  for (int i : plus) {
    const auto& v = verts[i];
    Mask t = 0;
    for (int e : mask_elements(v.tail)) t = with_element(t, p.n + 1 - e);
    minus.push_back(hh_index(p, {p.n + 1 - v.head, t}));
  }
  std::sort(minus.begin(), minus.end());
  return {plus, minus};
}

namespace {

class MisSolver {
 public:
  MisSolver(const Graph& g, std::chrono::milliseconds budget)
      : n_(g.vertex_count()),
        deadline_(std::chrono::steady_clock::now() + budget) {
    adj_.reserve(n_);
    for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
  }

  AlphaResult run(const VertexSet* seed, const Graph& g) {
    best_.clear();
    if (seed) {
      if (!is_independent(g, *seed))
        throw std::invalid_argument("alpha_exact: seed is not independent");
      best_ = *seed;
    }
    Bitset all(n_);
    all.fill_first(n_);
    cur_.clear();
    solve(all);
    std::sort(best_.begin(), best_.end());
    return {static_cast<long long>(best_.size()), best_, !aborted_};
  }

 private:
  bool time_up() {
    if (aborted_) return true;
    if ((++nodes_ & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > deadline_)
      aborted_ = true;
    return aborted_;
  }

  // Clique cover of the candidates: classes are single vertices or edges
  // (the graph side is triangle-free in the intended use, and pairs are
  // the only cliques a greedy pass needs). alpha(P) <= |P| - matched.
  int bound(const Bitset& P) {
    int cnt = P.count();
    Bitset rem = P;
    int matched = 0;
    for (int v = rem.first(); v >= 0; v = rem.first()) {
      rem.reset(v);
      Bitset nb = adj_[v] & rem;
      int w = nb.first();
      if (w >= 0) {
        rem.reset(w);
        ++matched;
      }
    }
    return cnt - matched;
  }

  void solve(Bitset P) {
    if (time_up()) return;
    const size_t mark = cur_.size();

    // Reductions: isolated and pendant vertices are always taken; a
    // degree-2 vertex with adjacent neighbors likewise.
    bool changed = true;
    while (changed) {
      changed = false;
      int vmax = -1, dmax = -1;
      for (int v : P.to_vector()) {
        if (!P.test(v)) continue;
        Bitset nb = adj_[v] & P;
        int d = nb.count();
        if (d == 0) {
          cur_.push_back(v);
          P.reset(v);
          changed = true;
          continue;
        }
        if (d == 1) {
          cur_.push_back(v);
          P.reset(v);
          P.reset(nb.first());
          changed = true;
          continue;
        }
        if (d == 2) {
          int a = nb.first();
          nb.reset(a);
          int b = nb.first();
          if (adj_[a].test(b)) {
            cur_.push_back(v);
            P.reset(v);
            P.reset(a);
            P.reset(b);
            changed = true;
            continue;
          }
        }
        if (d > dmax) {
          dmax = d;
          vmax = v;
        }
      }
      if (changed) continue;
      if (!changed) {
        if (vmax < 0) {  // P empty
          if (cur_.size() > best_.size()) best_ = cur_;
          cur_.resize(mark);
          return;
        }
        if (static_cast<int>(cur_.size()) + bound(P) >
            static_cast<int>(best_.size())) {
          Bitset pin = P;
          pin -= adj_[vmax];
          pin.reset(vmax);
          cur_.push_back(vmax);
          solve(pin);
          cur_.pop_back();
          Bitset pex = P;
          pex.reset(vmax);
          solve(pex);
        }
        cur_.resize(mark);
        return;
      }
    }
  }

  int n_;
  std::vector<Bitset> adj_;
  VertexSet best_;
  std::vector<int> cur_;
  std::chrono::steady_clock::time_point deadline_;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

AlphaResult alpha_exact(const Graph& g, std::chrono::milliseconds budget,
                        const VertexSet* seed) {
  MisSolver solver(g, budget);
  return solver.run(seed, g);
}

}  // namespace hh
