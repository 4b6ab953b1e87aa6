#ifndef HH_METRICS_HPP
#define HH_METRICS_HPP

#include <optional>
#include <vector>

#include "hh/graph.hpp"
#include "hh/metric.hpp"

namespace hh {

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// Shortest path length between u and v; INFINITE iff in different components.
Metric distance(const Graph& g, int u, int v);

// Maximum pairwise distance; INFINITE iff disconnected (or n <= 0 trivially 0).
Metric diameter(const Graph& g);

// Shortest cycle length; INFINITE for forests.
Metric girth(const Graph& g);

// Shortest odd cycle length; INFINITE iff bipartite. Computed as the
// minimum over v of dist(v, twin(v)) in the bipartite double cover.
Metric odd_girth(const Graph& g);

// Reachability classes, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// If bipartite, returns a side assignment (0/1 per vertex); otherwise nullopt.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

// {w : w~u and w~v}
Bitset common_neighbors(const Graph& g, int u, int v);

}  // namespace hh

#endif
