#include "hh/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace hh {

void Graph::check_index(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("Graph: vertex index " + std::to_string(v) +
                            " out of range [0," + std::to_string(n_) + ")");
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(vertex_count), m_(0), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("Graph: label count != vertex count");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n_)
      throw std::invalid_argument("Graph: duplicate labels");
  }
  adj_.assign(n_, Bitset(n_));
  for (auto [u, v] : edges) {
    check_index(u);
    check_index(v);
    if (u == v)
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
    if (!adj_[u].test(v)) {
      adj_[u].set(v);
      adj_[v].set(u);
      ++m_;
    }
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels) {
  return Graph(vertex_count, edges, std::move(labels));
}

}  // namespace hh
