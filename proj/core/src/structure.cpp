#include "hh/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hh {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  long long classes() {
    long long c = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
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

}  // namespace

CellPartition three_cell_partition(const FamilyParams& p) {
  if (p.n < p.r + 2)
    throw std::invalid_argument("three_cell_partition: requires n >= r+2");
  auto verts = hh_vertices(p);
  CellPartition part;
  part.cells.assign(3, {});
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    const auto& v = verts[i];
    if (v.head == p.n)
      part.cells[2].push_back(i);
    else if (element_in(v.tail, p.n))
      part.cells[1].push_back(i);
    else
      part.cells[0].push_back(i);
  }
  return part;
}

QuotientResult quotient_matrix(const Graph& g, const CellPartition& part) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(part.cells.size());
  std::vector<int> cell_of(n, -1);
  for (int c = 0; c < k; ++c)
    for (int v : part.cells[c]) {
      if (v < 0 || v >= n || cell_of[v] != -1)
        throw std::invalid_argument("quotient_matrix: partition does not cover g");
      cell_of[v] = c;
    }
  for (int v = 0; v < n; ++v)
    if (cell_of[v] == -1)
      throw std::invalid_argument("quotient_matrix: partition does not cover g");

  QuotientResult res;
  res.matrix.assign(k, std::vector<long long>(k, 0));
  // First vertex of each cell fixes the row; any disagreeing vertex in the
  // same cell is the witness, reported in canonical order.
  auto counts = [&](int v) {
    std::vector<long long> row(k, 0);
    g.neighbors(v).for_each([&](int w) { ++row[cell_of[w]]; });
    return row;
  };
  for (int c = 0; c < k; ++c) {
    if (part.cells[c].empty())
      throw std::invalid_argument("quotient_matrix: empty cell");
    res.matrix[c] = counts(part.cells[c].front());
    for (int v : part.cells[c])
      if (counts(v) != res.matrix[c]) {
        res.equitable = false;
        res.witness = {part.cells[c].front(), v};
        return res;
      }
  }
  res.equitable = true;
  return res;
}

QuotientMatrix expected_quotient_matrix(const FamilyParams& p) {
  if (p.r < 2 || p.n < 2 * p.r + 1)
    throw std::invalid_argument("expected_quotient_matrix: requires r >= 2, n >= 2r+1");
  const int n = p.n, r = p.r;
  return {
      {r * binomial(n - r - 2, r - 1), r * binomial(n - r - 2, r - 2), 0},
      {(r - 1) * binomial(n - r - 1, r - 1), 0, binomial(n - r - 1, r - 1)},
      {0, r * binomial(n - r - 1, r - 1), 0},
  };
}

std::pair<long long, long long> orbit_count(const Graph& g,
                                            const std::vector<std::vector<int>>& generators) {
  const int n = g.vertex_count();
  for (const auto& perm : generators)
    if (!is_automorphism(g, perm))
      throw std::invalid_argument("orbit_count: generator is not an automorphism");

  UnionFind vuf(n);
  for (const auto& perm : generators)
    for (int v = 0; v < n; ++v) vuf.unite(v, perm[v]);

  // Ordered adjacent pairs.
  auto edges = g.edges();
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  auto arc_id = [&](int u, int v) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(u, v));
    return static_cast<int>(it - arcs.begin());
  };
  std::sort(arcs.begin(), arcs.end());
  UnionFind auf(static_cast<int>(arcs.size()));
  for (const auto& perm : generators)
    for (size_t i = 0; i < arcs.size(); ++i)
      auf.unite(static_cast<int>(i), arc_id(perm[arcs[i].first], perm[arcs[i].second]));

  return {vuf.classes(), auf.classes()};
}

}  // namespace hh
