#include "eternal/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "eternal/error.hpp"

namespace eternal {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (g.adj_[e.u].contains(e.v)) {
      throw InvalidArgument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxVertices) throw InvalidArgument("more than 63 vertices");
  const VertexSet all = VertexSet::first(n);
  for (int v = 0; v < n; ++v) {
    if (!adjacency[v].is_subset_of(all)) throw InvalidArgument("neighbor outside vertex range");
    if (adjacency[v].contains(v)) throw InvalidArgument("loop at vertex " + std::to_string(v));
    for (int u : adjacency[v]) {
      if (!adjacency[u].contains(v)) throw InvalidArgument("adjacency is not symmetric");
    }
  }
  return Graph(std::move(adjacency));
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out;
}

VertexSet Graph::closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet s : adj_) best = std::max(best, s.size());
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = kMaxVertices;
  for (VertexSet s : adj_) best = std::min(best, s.size());
  return best;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet s) { return s.empty(); });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!s.without(v).is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

VertexSet Graph::reach(int start, VertexSet within) const {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    const VertexSet next = (neighbors(frontier) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected(VertexSet s) const {
  if (s.empty()) return true;
  return reach(s.lowest(), s) == s;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (!left.empty()) {
    const VertexSet c = reach(left.lowest(), left);
    out.push_back(c);
    left -= c;
  }
  return out;
}

Graph Graph::induced_subgraph(VertexSet s) const {
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  std::vector<VertexSet> adj(static_cast<std::size_t>(next));
  for (int v : s) {
    for (int u : adj_[v] & s) adj[index[v]].insert(index[u]);
  }
  return Graph(std::move(adj));
}

Graph Graph::complement() const {
  std::vector<VertexSet> adj(adj_.size());
  const VertexSet all = vertices();
  for (int v = 0; v < order(); ++v) adj[v] = (all - adj_[v]).without(v);
  return Graph(std::move(adj));
}

std::optional<Bipartition> Graph::bipartition() const {
  Bipartition parts;
  for (VertexSet comp : components()) {
    VertexSet side[2];
    side[0] = VertexSet::single(comp.lowest());
    VertexSet frontier = side[0];
    int colour = 0;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
      colour ^= 1;
      const VertexSet next = neighbors(frontier) - seen;
      side[colour] |= next;
      seen |= next;
      frontier = next;
    }
    for (int c = 0; c < 2; ++c) {
      for (int v : side[c]) {
        if (adj_[v].intersects(side[c])) return std::nullopt;
      }
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

bool Graph::is_triangle_free() const {
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v && adj_[u].intersects(adj_[v])) return false;
    }
  }
  return true;
}

bool Graph::is_tree() const {
  return order() >= 1 && size() == order() - 1 && is_connected();
}

namespace {

// Whitespace-separated integer reader that remembers byte offsets for errors.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  std::optional<long> next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return std::nullopt;
    long value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || (end != text_.data() + text_.size() &&
                              !std::isspace(static_cast<unsigned char>(*end)))) {
      throw ParseError("expected an integer", pos_);
    }
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::size_t offset() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tokens(text);
  const auto n = tokens.next();
  const auto m = tokens.next();
  if (!n || !m) throw ParseError("edge list must start with \"n m\"", tokens.offset());
  if (*n < 0 || *n > kMaxVertices) throw ParseError("vertex count out of range", 0);
  if (*m < 0) throw ParseError("negative edge count", 0);
  std::vector<Edge> edges;
  for (long i = 0; i < *m; ++i) {
    const auto u = tokens.next();
    const auto v = tokens.next();
    if (!u || !v) throw ParseError("edge list ended after " + std::to_string(i) + " edges", tokens.offset());
    edges.push_back({static_cast<int>(*u), static_cast<int>(*v)});
  }
  if (tokens.next()) throw ParseError("trailing data after the last edge", tokens.offset());
  try {
    return Graph::from_edge_list(static_cast<int>(*n), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), tokens.offset());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string describe(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out + "}";
}

}  // namespace eternal
