#include "hh/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hh/automorphism.hpp"
#include "hh/metrics.hpp"
#include "hh/structure.hpp"

namespace hh {

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v]) return false;
  return true;
}

Coloring chi_upper_greedy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Bitset> sat(n, Bitset(256));  // colors seen in the neighborhood
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      int s = sat[u].count();
      int d = g.degree(u);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        v = u;
        best_sat = s;
        best_deg = d;
      }
    }
    int c = 0;
    while (sat[v].test(c)) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
    g.neighbors(v).for_each([&](int w) {
      if (c < 256) sat[w].set(c);
    });
  }
  return {color, std::max(used, n > 0 ? 1 : 0)};
}

namespace {

// DSATUR-ordered backtracking k-colorability with new-color symmetry
// breaking (a vertex may open at most one fresh color).
class KColor {
 public:
  KColor(const Graph& g, int k, std::chrono::steady_clock::time_point deadline)
      : g_(g), n_(g.vertex_count()), k_(k), deadline_(deadline) {}

  // 1 = colorable (out filled), 0 = not colorable, -1 = budget exhausted
  int solve(std::vector<int>& out) {
    color_.assign(n_, -1);
    sat_.assign(n_, Bitset(k_));
    if (dfs(0, 0)) {
      if (aborted_) return -1;
      out = color_;
      return 1;
    }
    return aborted_ ? -1 : 0;
  }

 private:
  bool time_up() {
    if (aborted_) return true;
    if ((++ticks_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
      aborted_ = true;
    return aborted_;
  }

  bool dfs(int depth, int used) {
    if (time_up()) return true;  // unwind; caller checks aborted_
    if (depth == n_) return true;
    int v = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      int s = sat_[u].count();
      if (s >= k_) return false;  // no color available
      int d = g_.degree(u);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        v = u;
        best_sat = s;
        best_deg = d;
      }
    }
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (sat_[v].test(c)) continue;
      color_[v] = c;
      std::vector<int> touched;
      g_.neighbors(v).for_each([&](int w) {
        if (color_[w] < 0 && !sat_[w].test(c)) {
          sat_[w].set(c);
          touched.push_back(w);
        }
      });
      if (dfs(depth + 1, std::max(used, c + 1))) return true;
      if (aborted_) return true;
      for (int w : touched) sat_[w].reset(c);
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_, k_;
  std::vector<int> color_;
  std::vector<Bitset> sat_;
  std::chrono::steady_clock::time_point deadline_;
  uint64_t ticks_ = 0;
  bool aborted_ = false;
};

}  // namespace

ChiResult chi_exact(const Graph& g, std::chrono::milliseconds budget) {
  const auto deadline = std::chrono::steady_clock::now() + budget;
  const int n = g.vertex_count();
  if (n == 0) return {0, 0, Coloring{{}, 0}, true};
  Coloring greedy = chi_upper_greedy(g);
  if (g.edge_count() == 0)
    return {1, 1, Coloring{std::vector<int>(n, 0), 1}, true};
  if (auto side = is_bipartite(g))
    return {2, 2, Coloring{*side, 2}, true};

  int lb = 3;  // has an odd cycle
  int ub = greedy.color_count;
  Coloring best = greedy;
  for (int k = lb; k < ub; ++k) {
    KColor solver(g, k, deadline);
    std::vector<int> assignment;
    int res = solver.solve(assignment);
    if (res == 1) {
      best = {assignment, k};
      ub = k;
      break;
    }
    if (res == -1) return {k, ub, best, false};
    lb = k + 1;
  }
  return {ub, ub, best, true};
}

Coloring constructive_coloring(const FamilyParams& p) {
  if (p.r < 2 || p.n < 2 * p.r)
    throw std::invalid_argument("constructive_coloring: requires r >= 2, n >= 2r");
  auto verts = hh_vertices(p);
  const int r2 = 2 * p.r;
  std::vector<int> color(verts.size());
  int used = 0;
  for (size_t i = 0; i < verts.size(); ++i) {
    const auto& v = verts[i];
    int mx = mask_elements(v.tail).back();
    int c;
    if (mx > r2)
      c = mx - r2 + 1;  // fresh color per recursion step
    else if (v.head > r2)
      c = 0;
    else
      c = element_in(v.tail, 1) ? 1 : 0;
    color[i] = c;
    used = std::max(used, c + 1);
  }
  return {color, used};
}

Rational fractional_chromatic(const Graph& g,
                              const std::vector<std::vector<int>>& transitive_generators,
                              long long alpha) {
  auto [vorb, aorb] = orbit_count(g, transitive_generators);
  (void)aorb;
  if (vorb != 1)
    throw std::invalid_argument("fractional_chromatic: group is not vertex transitive");
  if (alpha <= 0) throw std::invalid_argument("fractional_chromatic: alpha must be positive");
  return Rational(g.vertex_count(), alpha);
}

FractionalColoring orbit_fractional_coloring(const Graph& g,
                                             const std::vector<std::vector<int>>& generators,
                                             const VertexSet& s, long long group_cap) {
  if (!is_independent(g, s))
    throw std::invalid_argument("orbit_fractional_coloring: s is not independent");
  if (s.empty()) throw std::invalid_argument("orbit_fractional_coloring: s is empty");
  auto group = generate_group(generators, group_cap);
  auto [vorb, aorb] = orbit_count(g, generators);
  (void)aorb;
  if (vorb != 1)
    throw std::invalid_argument("orbit_fractional_coloring: group is not vertex transitive");

  const long long nv = g.vertex_count();
  const long long gs = static_cast<long long>(group.size()) *
                       static_cast<long long>(s.size());
  if (gs % nv != 0)
    throw std::logic_error("orbit_fractional_coloring: |G||s| not divisible by |V|");
  const long long rprime = gs / nv;

  std::map<VertexSet, long long> images;
  for (const auto& perm : group) {
    VertexSet img;
    img.reserve(s.size());
    for (int v : s) img.push_back(perm[v]);
    std::sort(img.begin(), img.end());
    ++images[img];
  }

  FractionalColoring fc;
  fc.total_weight = Rational(0);
  std::vector<Rational> cover(nv, Rational(0));
  for (const auto& [img, mult] : images) {
    Rational w(mult, rprime);
    fc.weighted_sets.emplace_back(img, w);
    fc.total_weight += w;
    for (int v : img) cover[v] += w;
  }
  for (long long v = 0; v < nv; ++v)
    if (cover[v] != Rational(1))
      throw std::logic_error("orbit_fractional_coloring: cover weight != 1");
  return fc;
}

}  // namespace hh
