#include "eternal/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "eternal/error.hpp"

namespace eternal {

namespace {

// Colour refinement: classes are numbered by sorted signature, so the final
// colouring is invariant under relabelling.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int classes = 1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      signature[v].first = colour[v];
      for (int u : g.neighbors(v)) signature[v].second.push_back(colour[u]);
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    auto sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) return colour;
    classes = now;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    colour_ = refined_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    placed_.assign(static_cast<std::size_t>(n_), 0);
    column_.assign(static_cast<std::size_t>(n_), 0);
    best_column_.assign(static_cast<std::size_t>(n_), 0);
    best_perm_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run() { search(0, false, VertexSet{}); }

  CanonicalForm form() const {
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) code = (code << j) | best_column_[j];
    return {n_, code};
  }

  const std::vector<int>& permutation() const { return best_perm_; }

 private:
  void search(int depth, bool ahead, VertexSet used) {
    if (depth == n_) {
      if (ahead || !have_best_) {
        best_column_ = column_;
        best_perm_ = placed_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used.contains(v) || colour_[v] != slot_colour_[depth]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (g_.adjacent(placed_[i], v) ? 1U : 0U);
      bool now_ahead = ahead || !have_best_;
      if (!now_ahead) {
        if (col < best_column_[depth]) continue;
        now_ahead = col > best_column_[depth];
      }
      placed_[depth] = v;
      column_[depth] = col;
      search(depth + 1, now_ahead, used.with(v));
      // A new best may have been recorded below; later siblings compare against it.
      if (now_ahead && have_best_) ahead = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> placed_;
  std::vector<std::uint64_t> column_;
  std::vector<std::uint64_t> best_column_;
  std::vector<int> best_perm_;
  bool have_best_ = false;
};

void require_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw LimitExceeded("canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices; got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  require_canonical_order(g);
  Canonizer c(g);
  c.run();
  return c.form();
}

Graph graph_from_canonical_form(const CanonicalForm& form) {
  const int n = form.order;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  // Columns were packed MSB-first: column j occupies j bits, row 0 highest.
  int shift = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    shift -= j;
    const std::uint64_t col = (form.code >> shift) & ((std::uint64_t{1} << j) - 1);
    for (int i = 0; i < j; ++i) {
      if ((col >> (j - 1 - i)) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph canonical_graph(const Graph& g) { return graph_from_canonical_form(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.is_tree() && h.is_tree()) return tree_canonical_form(g) == tree_canonical_form(h);
  return canonical_form(g) == canonical_form(h);
}

namespace {

std::string encode_rooted(const Graph& t, int v, int parent) {
  std::vector<std::string> children;
  for (int u : t.neighbors(v)) {
    if (u != parent) children.push_back(encode_rooted(t, u, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<int> tree_centres(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<int> all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  VertexSet alive = t.vertices();
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
  while (alive.size() > 2) {
    VertexSet leaves;
    for (int v : alive) {
      if (degree[v] <= 1) leaves.insert(v);
    }
    for (int v : leaves) {
      for (int u : t.neighbors(v) & alive) --degree[u];
    }
    alive -= leaves;
  }
  return alive.to_vector();
}

Graph tree_from_encoding(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<int> stack;
  int next = 0;
  for (char c : code) {
    if (c == '(') {
      const int v = next++;
      if (!stack.empty()) edges.push_back({stack.back(), v});
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return Graph::from_edge_list(next, edges);
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw InvalidArgument("tree_canonical_form: input is not a tree");
  std::string best;
  for (int c : tree_centres(tree)) {
    std::string code = encode_rooted(tree, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

const std::vector<Graph>& enumerate_nonisomorphic(int n) {
  if (n < 1 || n > kMaxEnumeratedOrder) {
    throw LimitExceeded("enumeration supports orders 1.." + std::to_string(kMaxEnumeratedOrder) +
                        "; supply larger graphs as graph6 files from an external generator");
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    if (auto it = cache.find(order); it != cache.end()) {
      level = it->second;
      continue;
    }
    std::set<CanonicalForm> seen;
    for (const Graph& base : level) {
      std::vector<VertexSet> adj(static_cast<std::size_t>(order));
      for (int v = 0; v + 1 < order; ++v) adj[v] = base.neighbors(v);
      const std::uint64_t subsets = std::uint64_t{1} << (order - 1);
      for (std::uint64_t s = 0; s < subsets; ++s) {
        const VertexSet attach(s);
        std::vector<VertexSet> grown = adj;
        grown[order - 1] = attach;
        for (int v : attach) grown[v].insert(order - 1);
        seen.insert(canonical_form(Graph::from_adjacency(std::move(grown))));
      }
    }
    level.clear();
    for (const CanonicalForm& f : seen) level.push_back(graph_from_canonical_form(f));
    cache.emplace(order, level);
  }
  if (n == 1) cache.emplace(1, level);
  return cache.at(n);
}

const std::vector<Graph>& enumerate_trees(int n) {
  if (n < 1 || n > kMaxEnumeratedTreeOrder) {
    throw LimitExceeded("tree enumeration supports orders 1.." + std::to_string(kMaxEnumeratedTreeOrder));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Graph> level{Graph(1)};
  cache.emplace(1, level);
  for (int order = 2; order <= n; ++order) {
    if (auto it = cache.find(order); it != cache.end()) {
      level = it->second;
      continue;
    }
    std::set<std::string> seen;
    for (const Graph& base : level) {
      for (int v = 0; v + 1 < order; ++v) {
        std::vector<Edge> edges = base.edges();
        edges.push_back({v, order - 1});
        seen.insert(tree_canonical_form(Graph::from_edge_list(order, edges)));
      }
    }
    level.clear();
    for (const std::string& code : seen) level.push_back(tree_from_encoding(code));
    cache.emplace(order, level);
  }
  return cache.at(n);
}

}  // namespace eternal
