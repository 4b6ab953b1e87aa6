#ifndef HH_GRAPH_HPP
#define HH_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "hh/bitset.hpp"

namespace hh {

// Immutable simple graph: bit-packed symmetric irreflexive adjacency plus
// optional per-vertex labels. Vertex indices are dense and 0-based; all
// family semantics live in the labels.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_index(u);
    check_index(v);
    return adj_[u].test(v);
  }

  const Bitset& neighbors(int v) const {
    check_index(v);
    return adj_[v];
  }

  int degree(int v) const { return neighbors(v).count(); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const {
    check_index(v);
    return labels_.at(v);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  // All edges (u < v) in canonical (lexicographic) order.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_index(int v) const;

  int n_;
  long long m_;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

// Builds a graph from an edge list. Duplicate pairs collapse; (u,v) and
// (v,u) are the same edge. Throws on out-of-range indices and self-loops.
Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels = {});

}  // namespace hh

#endif
