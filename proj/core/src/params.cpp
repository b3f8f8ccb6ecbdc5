#include "eternal/params.hpp"

#include <algorithm>
#include <unordered_map>

#include "eternal/error.hpp"

namespace eternal {

namespace {

// Maps a set over the vertices of component `comp` (relabelled 0..|comp|-1)
// back to the original numbering.
VertexSet lift(VertexSet local, VertexSet comp) {
  const std::vector<int> members = comp.to_vector();
  VertexSet out;
  for (int i : local) out.insert(members[i]);
  return out;
}

// Lexicographically first k-set (from `start` on) completing `chosen` into a
// dominating set.
bool find_dominating(const Graph& g, int start, int remaining, VertexSet dominated, VertexSet& chosen,
                     int max_cover, bool need_connected) {
  const VertexSet all = g.vertices();
  if (remaining == 0) return dominated == all && (!need_connected || g.is_connected(chosen));
  const VertexSet open = all - dominated;
  if (open.size() > remaining * max_cover) return false;
  // Some later vertex must dominate the smallest undominated vertex.
  if (!open.empty() && (g.closed_neighbors(open.lowest()).bits() >> start) == 0) return false;
  for (int v = start; v <= g.order() - remaining; ++v) {
    chosen.insert(v);
    if (find_dominating(g, v + 1, remaining - 1, dominated | g.closed_neighbors(v), chosen, max_cover,
                        need_connected)) {
      return true;
    }
    chosen.erase(v);
  }
  return false;
}

int max_independent_size(const Graph& g, VertexSet candidates) {
  if (candidates.empty()) return 0;
  // Branch on a vertex of maximum degree inside the candidates; take
  // degree <= 1 vertices greedily.
  int pick = -1;
  int pick_degree = -1;
  for (int v : candidates) {
    const int d = (g.neighbors(v) & candidates).size();
    if (d <= 1) return 1 + max_independent_size(g, candidates - g.closed_neighbors(v));
    if (d > pick_degree) {
      pick = v;
      pick_degree = d;
    }
  }
  return std::max(1 + max_independent_size(g, candidates - g.closed_neighbors(pick)),
                  max_independent_size(g, candidates.without(pick)));
}

bool find_independent(const Graph& g, VertexSet candidates, int remaining, VertexSet& chosen) {
  if (remaining == 0) return true;
  if (candidates.size() < remaining) return false;
  for (int v : candidates) {
    const VertexSet later(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
    if (later.size() + 1 < remaining) return false;
    chosen.insert(v);
    if (find_independent(g, later - g.neighbors(v), remaining - 1, chosen)) return true;
    chosen.erase(v);
  }
  return false;
}

bool find_clique_partition(const Graph& g, int v, int limit, std::vector<VertexSet>& parts) {
  if (v == g.order()) return true;
  // Indexing, not references: deeper calls may grow `parts`.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_subset_of(g.neighbors(v))) {
      parts[i].insert(v);
      if (find_clique_partition(g, v + 1, limit, parts)) return true;
      parts[i].erase(v);
    }
  }
  if (static_cast<int>(parts.size()) < limit) {
    parts.push_back(VertexSet::single(v));
    if (find_clique_partition(g, v + 1, limit, parts)) return true;
    parts.pop_back();
  }
  return false;
}

// Decides vertices in order; including v first yields the lexicographically
// smallest cover of the requested size.
bool find_cover(const Graph& g, int v, int remaining, VertexSet chosen, VertexSet forced, VertexSet& out) {
  if (v == g.order()) {
    if (remaining != 0) return false;
    out = chosen;
    return true;
  }
  const VertexSet undecided_forced(forced.bits() & ~((std::uint64_t{1} << v) - 1));
  if (undecided_forced.size() > remaining) return false;
  if (remaining > 0 && find_cover(g, v + 1, remaining - 1, chosen.with(v), forced, out)) return true;
  if (forced.contains(v)) return false;
  // Leaving v out forces all of its neighbours in; earlier ones must already be.
  const VertexSet earlier(g.neighbors(v).bits() & ((std::uint64_t{1} << v) - 1));
  if (!earlier.is_subset_of(chosen)) return false;
  return find_cover(g, v + 1, remaining, chosen, forced | g.neighbors(v), out);
}

// Kuhn's augmenting paths from `left` vertices (in increasing order) into
// `right`, trying neighbours in increasing order.
std::vector<int> bipartite_match(const Graph& g, VertexSet left, VertexSet right) {
  std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
  auto augment = [&](auto&& self, int u, VertexSet& visited) -> bool {
    for (int w : g.neighbors(u) & right) {
      if (visited.contains(w)) continue;
      visited.insert(w);
      if (mate[w] < 0 || self(self, mate[w], visited)) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (int u : left) {
    VertexSet visited;
    augment(augment, u, visited);
  }
  return mate;
}

class GeneralMatching {
 public:
  explicit GeneralMatching(const Graph& g) : g_(g) {}

  int size(VertexSet u) {
    if (u.size() < 2) return 0;
    if (auto it = memo_.find(u.bits()); it != memo_.end()) return it->second;
    const int v = u.lowest();
    const VertexSet rest = u.without(v);
    int best = size(rest);
    for (int w : g_.neighbors(v) & rest) best = std::max(best, 1 + size(rest.without(w)));
    memo_.emplace(u.bits(), best);
    return best;
  }

  std::vector<Edge> witness(VertexSet u) {
    std::vector<Edge> out;
    while (u.size() >= 2) {
      const int v = u.lowest();
      const VertexSet rest = u.without(v);
      const int target = size(u);
      bool matched = false;
      for (int w : g_.neighbors(v) & rest) {
        if (1 + size(rest.without(w)) == target) {
          out.push_back({v, w});
          u = rest.without(w);
          matched = true;
          break;
        }
      }
      if (!matched) u = rest;
    }
    return out;
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, int> memo_;
};

SetOptimum connected_component_domination(const Graph& g) {
  const int max_cover = g.max_degree() + 1;
  for (int k = 1; k <= g.order(); ++k) {
    VertexSet chosen;
    if (find_dominating(g, 0, k, VertexSet{}, chosen, max_cover, false)) return {k, chosen};
  }
  return {0, VertexSet{}};
}

}  // namespace

std::optional<VertexSet> first_dominating_set(const Graph& g, int k) {
  if (k < 0 || k > g.order()) return std::nullopt;
  VertexSet chosen;
  if (find_dominating(g, 0, k, VertexSet{}, chosen, g.max_degree() + 1, false)) return chosen;
  return std::nullopt;
}

std::vector<VertexSet> dominating_sets_of_size(const Graph& g, int k) {
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
    if (g.dominates(s)) out.push_back(s);
  });
  return out;
}

SetOptimum domination_number(const Graph& g) {
  SetOptimum total;
  for (VertexSet comp : g.components()) {
    const SetOptimum part = connected_component_domination(g.induced_subgraph(comp));
    total.value += part.value;
    total.witness |= lift(part.witness, comp);
  }
  return total;
}

SetOptimum independence_number(const Graph& g) {
  SetOptimum total;
  for (VertexSet comp : g.components()) {
    const Graph h = g.induced_subgraph(comp);
    const int alpha = max_independent_size(h, h.vertices());
    VertexSet chosen;
    find_independent(h, h.vertices(), alpha, chosen);
    total.value += alpha;
    total.witness |= lift(chosen, comp);
  }
  return total;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
  const int alpha = independence_number(g).value;
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.order(), alpha, [&](VertexSet s) {
    if (g.is_independent(s)) out.push_back(s);
  });
  return out;
}

CliquePartition clique_cover_number(const Graph& g) {
  CliquePartition total;
  for (VertexSet comp : g.components()) {
    const Graph h = g.induced_subgraph(comp);
    std::vector<VertexSet> parts;
    for (int k = max_independent_size(h, h.vertices()); k <= h.order(); ++k) {
      parts.clear();
      if (find_clique_partition(h, 0, k, parts)) break;
    }
    total.value += static_cast<int>(parts.size());
    for (VertexSet p : parts) total.parts.push_back(lift(p, comp));
  }
  std::sort(total.parts.begin(), total.parts.end(),
            [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  return total;
}

SetOptimum connected_domination_number(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) {
    throw InvalidArgument("connected domination number is undefined for disconnected graphs");
  }
  const int max_cover = g.max_degree() + 1;
  for (int k = 1; k <= g.order(); ++k) {
    VertexSet chosen;
    if (find_dominating(g, 0, k, VertexSet{}, chosen, max_cover, true)) return {k, chosen};
  }
  throw InvalidArgument("no connected dominating set");  // unreachable for connected graphs
}

int maximum_matching_size(const Graph& g) {
  if (const auto parts = g.bipartition()) {
    const std::vector<int> mate = bipartite_match(g, parts->left, parts->right);
    int matched = 0;
    for (int v : parts->left) matched += mate[v] >= 0 ? 1 : 0;
    return matched;
  }
  GeneralMatching m(g);
  return m.size(g.vertices());
}

CoverAndMatching vertex_cover_and_matching(const Graph& g) {
  CoverAndMatching out;
  out.cover_size = g.order() - independence_number(g).value;
  find_cover(g, 0, out.cover_size, VertexSet{}, VertexSet{}, out.cover);
  if (g.is_bipartite()) {
    const std::vector<int> mate = bipartite_match(g, out.cover, g.vertices() - out.cover);
    for (int c : out.cover) {
      if (mate[c] < 0) throw Error("internal: minimum cover of a bipartite graph not saturated");
      out.matching.push_back({std::min(c, mate[c]), std::max(c, mate[c])});
    }
  } else {
    GeneralMatching m(g);
    out.matching = m.witness(g.vertices());
  }
  std::sort(out.matching.begin(), out.matching.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  out.matching_size = static_cast<int>(out.matching.size());
  return out;
}

PrivateNeighbors private_neighbors(const Graph& g, VertexSet d, int v) {
  if (!d.contains(v)) throw InvalidArgument("private_neighbors: vertex " + std::to_string(v) + " not in the set");
  const VertexSet pn = g.closed_neighbors(v) - g.closed_neighbors(d.without(v));
  return {pn, pn.without(v)};
}

KDominationCoverage every_vertex_in_k_dominating_set(const Graph& g, int k) {
  if (k < 1 || k > g.order()) throw InvalidArgument("k must lie in 1..n");
  VertexSet covered;
  for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
    if (!s.is_subset_of(covered) && g.dominates(s)) covered |= s;
  });
  const VertexSet uncovered = g.vertices() - covered;
  return {uncovered.empty(), uncovered};
}

}  // namespace eternal
