#include "hh/metrics.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace hh {

std::vector<int> bfs_distances(const Graph& g, int src) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<int> frontier{src};
  dist[src] = 0;
  int d = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    ++d;
    for (int u : frontier)
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = d;
          next.push_back(v);
        }
      });
    frontier = std::move(next);
  }
  return dist;
}

Metric distance(const Graph& g, int u, int v) {
  if (u == v) {
    g.neighbors(u);  // range check
    return Metric::finite(0);
  }
  auto dist = bfs_distances(g, u);
  if (v < 0 || v >= g.vertex_count()) g.neighbors(v);
  if (dist[v] < 0) return Metric::infinite();
  return Metric::finite(dist[v]);
}

Metric diameter(const Graph& g) {
  const int n = g.vertex_count();
  long long best = 0;
  for (int u = 0; u < n; ++u) {
    auto dist = bfs_distances(g, u);
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return Metric::infinite();
      best = std::max<long long>(best, dist[v]);
    }
  }
  return Metric::finite(best);
}

Metric girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge at depth d closes a cycle of
  // length dist[u]+dist[v]+1. Minimizing over all roots yields the girth.
  const int n = g.vertex_count();
  long long best = -1;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best > 0 && 2LL * dist[u] >= best) break;
      bool stop = false;
      g.neighbors(u).for_each([&](int v) {
        if (stop) return;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          long long c = dist[u] + dist[v] + 1;
          if (best < 0 || c < best) best = c;
        }
      });
    }
    if (best == 3) break;
  }
  if (best < 0) return Metric::infinite();
  return Metric::finite(best);
}

Metric odd_girth(const Graph& g) {
  // BFS on the bipartite double cover: vertex (v, parity). The shortest
  // odd closed walk through v has length dist((v,0),(v,1)), and the
  // minimum over v is the odd girth.
  const int n = g.vertex_count();
  long long best = -1;
  for (int s = 0; s < n; ++s) {
    std::vector<std::array<int, 2>> dist(n, {-1, -1});
    std::queue<std::pair<int, int>> q;
    dist[s][0] = 0;
    q.push({s, 0});
    while (!q.empty()) {
      auto [u, p] = q.front();
      q.pop();
      if (dist[s][1] >= 0) break;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v][p ^ 1] < 0) {
          dist[v][p ^ 1] = dist[u][p] + 1;
          q.push({v, p ^ 1});
        }
      });
    }
    if (dist[s][1] >= 0 && (best < 0 || dist[s][1] < best)) best = dist[s][1];
    if (best == 3) break;
  }
  if (best < 0) return Metric::infinite();
  return Metric::finite(best);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    comp[s] = id;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      g.neighbors(u).for_each([&](int v) {
        if (comp[v] < 0) {
          comp[v] = id;
          q.push(v);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    bool ok = true;
    while (!q.empty() && ok) {
      int u = q.front();
      q.pop();
      g.neighbors(u).for_each([&](int v) {
        if (side[v] < 0) {
          side[v] = side[u] ^ 1;
          q.push(v);
        } else if (side[v] == side[u]) {
          ok = false;
        }
      });
    }
    if (!ok) return std::nullopt;
  }
  return side;
}

Bitset common_neighbors(const Graph& g, int u, int v) {
  return g.neighbors(u) & g.neighbors(v);
}

}  // namespace hh
