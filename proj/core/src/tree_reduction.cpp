#include "eternal/tree_reduction.hpp"

#include <algorithm>
#include <map>

#include "eternal/canonical.hpp"
#include "eternal/error.hpp"
#include "eternal/params.hpp"

namespace eternal {

namespace {

void require_tree(const Graph& t, const char* who) {
  if (!t.is_tree()) throw InvalidArgument(std::string(who) + ": input is not a tree");
}

int live_degree(const Graph& t, VertexSet alive, int v) { return (t.neighbors(v) & alive).size(); }

VertexSet live_leaves(const Graph& t, VertexSet alive) {
  VertexSet out;
  for (int v : alive) {
    if (live_degree(t, alive, v) == 1) out.insert(v);
  }
  return out;
}

int base_value(VertexSet terminal) { return terminal.size() <= 2 ? 1 : 2; }

std::vector<int> distances_from(const Graph& t, int source) {
  std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
  dist[source] = 0;
  VertexSet frontier = VertexSet::single(source);
  VertexSet seen = frontier;
  for (int d = 1; !frontier.empty(); ++d) {
    const VertexSet next = t.neighbors(frontier) - seen;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace

std::string star_name(VertexSet terminal) {
  const int n = terminal.size();
  if (n <= 2) return "K" + std::to_string(n);
  return "K1," + std::to_string(n - 1);
}

std::string render_trace(const ReductionTrace& trace) {
  std::string out;
  for (const ReductionStep& s : trace.steps) {
    out += s.rule == ReductionRule::r1 ? "R1" : "R2";
    out += " at stem " + std::to_string(s.stem) + ": removed " + to_string(s.removed) + "\n";
  }
  out += "terminal " + star_name(trace.terminal) + " on " + to_string(trace.terminal) + "\n";
  return out;
}

bool is_star(const Graph& tree, VertexSet alive) {
  const int n = alive.size();
  if (n <= 2) return true;
  for (int v : alive) {
    if (live_degree(tree, alive, v) == n - 1) return true;
  }
  return false;
}

std::vector<ReductionStep> applicable_reductions(const Graph& tree, VertexSet alive) {
  std::vector<ReductionStep> out;
  const VertexSet leaves = live_leaves(tree, alive);
  for (int x : alive) {
    const VertexSet around = tree.neighbors(x) & alive;
    const VertexSet leaf_nbrs = around & leaves;
    if (leaf_nbrs.empty()) continue;
    const VertexSet inner_nbrs = around - leaves;
    if (leaf_nbrs.size() >= 2 && inner_nbrs.size() == 1) {
      out.push_back({ReductionRule::r1, x, leaf_nbrs});
    }
    if (around.size() == 2 && leaf_nbrs.size() == 1) {
      out.push_back({ReductionRule::r2, x, leaf_nbrs.with(x)});
    }
  }
  return out;
}

TreeReduction reduce_tree(const Graph& tree) {
  require_tree(tree, "reduce_tree");
  const int n = tree.order();

  int root = 0;
  int best_ecc = -1;
  for (int v = 0; v < n; ++v) {
    const auto dist = distances_from(tree, v);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc > best_ecc) {
      best_ecc = ecc;
      root = v;
    }
  }
  const std::vector<int> depth = distances_from(tree, root);

  ReductionTrace trace;
  VertexSet alive = tree.vertices();
  while (!is_star(tree, alive)) {
    const VertexSet leaves = live_leaves(tree, alive);
    int stem = -1;
    for (int v : tree.neighbors(leaves) & alive) {
      if (stem < 0 || depth[v] > depth[stem]) stem = v;
    }
    const VertexSet around = tree.neighbors(stem) & alive;
    const VertexSet leaf_nbrs = around & leaves;
    ReductionStep step;
    step.stem = stem;
    if (leaf_nbrs.size() >= 2 && (around - leaves).size() == 1) {
      step.rule = ReductionRule::r1;
      step.removed = leaf_nbrs;
    } else if (around.size() == 2 && leaf_nbrs.size() == 1) {
      step.rule = ReductionRule::r2;
      step.removed = leaf_nbrs.with(stem);
    } else {
      throw Error("internal: deepest stem " + std::to_string(stem) + " admits neither R1 nor R2");
    }
    alive -= step.removed;
    trace.steps.push_back(step);
  }
  trace.terminal = alive;
  trace.value = static_cast<int>(trace.steps.size()) + base_value(alive);
  return {trace.value, trace};
}

namespace {

class R2Search {
 public:
  explicit R2Search(const Graph& tree) : tree_(tree) {}

  bool reducible(VertexSet alive, std::vector<ReductionStep>& path) {
    const int n = alive.size();
    if (n == 2 || (n == 3 && is_star(tree_, alive))) {
      terminal_ = alive;
      return true;
    }
    const std::string key = tree_canonical_form(tree_.induced_subgraph(alive));
    if (auto it = memo_.find(key); it != memo_.end() && !it->second) return false;
    for (const ReductionStep& step : applicable_reductions(tree_, alive)) {
      if (step.rule != ReductionRule::r2) continue;
      path.push_back(step);
      if (reducible(alive - step.removed, path)) return true;
      path.pop_back();
    }
    memo_[key] = false;
    return false;
  }

  VertexSet terminal() const { return terminal_; }

 private:
  const Graph& tree_;
  std::map<std::string, bool> memo_;
  VertexSet terminal_;
};

}  // namespace

R2Reducibility r2_reduces_to_small_star(const Graph& tree) {
  require_tree(tree, "r2_reduces_to_small_star");
  if (tree.order() < 2) throw InvalidArgument("r2_reduces_to_small_star: tree needs at least two vertices");
  R2Search search(tree);
  std::vector<ReductionStep> path;
  if (!search.reducible(tree.vertices(), path)) return {false, std::nullopt};
  ReductionTrace trace;
  trace.steps = std::move(path);
  trace.terminal = search.terminal();
  trace.value = static_cast<int>(trace.steps.size()) + base_value(trace.terminal);
  return {true, trace};
}

Graph build_by_k2_attachment(AttachmentSeed seed, std::span<const int> attachments) {
  std::vector<Edge> edges{{0, 1}};
  int n = 2;
  if (seed == AttachmentSeed::p3) {
    edges.push_back({1, 2});
    n = 3;
  }
  for (int a : attachments) {
    if (a < 0 || a >= n) {
      throw InvalidArgument("attachment vertex " + std::to_string(a) + " does not exist in a tree of order " +
                            std::to_string(n));
    }
    edges.push_back({a, n});
    edges.push_back({n, n + 1});
    n += 2;
  }
  return Graph::from_edge_list(n, edges);
}

int tree_clique_cover(const Graph& tree) {
  require_tree(tree, "tree_clique_cover");
  return tree.order() - maximum_matching_size(tree);
}

}  // namespace eternal
