#pragma once

#include <optional>
#include <span>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eternal/vertex_set.hpp"

namespace eternal {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

// Simple undirected graph on vertices 0..n-1, n <= 63. Each vertex stores its
// open neighborhood as a bit mask. Values are immutable once built.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws InvalidArgument on an out-of-range endpoint, a loop or a repeated pair.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Adjacency masks must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::first(order()); }

  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v].with(v); }
  VertexSet neighbors(VertexSet s) const;
  VertexSet closed_neighbors(VertexSet s) const;
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int max_degree() const;
  int min_degree() const;
  bool has_isolated_vertex() const;
  std::vector<Edge> edges() const;

  bool dominates(VertexSet s) const { return closed_neighbors(s) == vertices(); }
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  bool is_complete() const { return is_clique(vertices()); }

  // Connectivity of the induced subgraph G[s]; the empty set counts as connected.
  bool is_connected(VertexSet s) const;
  bool is_connected() const { return is_connected(vertices()); }
  std::vector<VertexSet> components() const;
  // Vertex sets reachable from `start` inside `within`.
  VertexSet reach(int start, VertexSet within) const;

  // G[s], relabelled so that the members of s keep their relative order.
  Graph induced_subgraph(VertexSet s) const;
  Graph complement() const;

  // Two-colouring with vertex 0 of every component on the left side.
  std::optional<Bipartition> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }
  bool is_triangle_free() const;
  bool is_tree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<VertexSet> adj_;
};

// Edge list text: "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// One-line human description, e.g. "n=5 m=5 {0-1,1-2,...}".
std::string describe(const Graph& g);

}  // namespace eternal
