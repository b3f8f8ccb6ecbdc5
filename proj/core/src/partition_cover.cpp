#include "eternal/partition_cover.hpp"

#include <algorithm>
#include <limits>

#include "eternal/error.hpp"
#include "eternal/params.hpp"

namespace eternal {

int part_weight(const Graph& g, VertexSet part) {
  if (part.empty() || !g.is_connected(part)) {
    throw InvalidArgument("part " + to_string(part) + " does not induce a connected subgraph");
  }
  if (g.is_clique(part)) return 1;
  return 1 + connected_domination_number(g.induced_subgraph(part)).value;
}

NeoColonization make_colonization(const Graph& g, std::vector<VertexSet> parts) {
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
  NeoColonization c;
  for (VertexSet p : parts) {
    const int w = part_weight(g, p);
    c.parts.push_back(p);
    c.weights.push_back(w);
    c.total += w;
  }
  return c;
}

std::optional<std::string> validate_colonization(const Graph& g, const NeoColonization& c) {
  if (c.parts.size() != c.weights.size()) return "weights do not match parts";
  VertexSet seen;
  int total = 0;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    const VertexSet p = c.parts[i];
    if (p.empty()) return "empty part";
    if (p.intersects(seen)) return "parts " + to_string(p) + " overlap earlier parts";
    seen |= p;
    if (!g.is_connected(p)) return "part " + to_string(p) + " is disconnected";
    if (part_weight(g, p) != c.weights[i]) return "wrong weight for part " + to_string(p);
    total += c.weights[i];
  }
  if (seen != g.vertices()) return "parts do not cover V";
  if (total != c.total) return "total weight mismatch";
  return std::nullopt;
}

namespace {

// Minimum-weight colonization of a connected graph h (local numbering).
std::vector<VertexSet> colonize_component(const Graph& h) {
  const int n = h.order();
  const std::size_t states = std::size_t{1} << n;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;

  std::vector<char> connected(states, 0);
  for (std::size_t s = 1; s < states; ++s) connected[s] = h.is_connected(VertexSet(s)) ? 1 : 0;

  // gamma_c of G[S] is the smallest connected D with D <= S <= N[D]; connectivity
  // of D does not depend on S.
  std::vector<int> gamma_c(states, kInf);
  for (std::size_t d = 1; d < states; ++d) {
    if (!connected[d]) continue;
    const VertexSet dset(d);
    const int size = dset.size();
    const std::uint64_t free = (h.closed_neighbors(dset) - dset).bits();
    for (std::uint64_t x = free;; x = (x - 1) & free) {
      int& slot = gamma_c[d | x];
      slot = std::min(slot, size);
      if (x == 0) break;
    }
  }

  std::vector<int> weight(states, kInf);
  for (std::size_t s = 1; s < states; ++s) {
    if (!connected[s]) continue;
    weight[s] = h.is_clique(VertexSet(s)) ? 1 : 1 + gamma_c[s];
  }

  std::vector<int> best(states, kInf);
  std::vector<std::uint64_t> choice(states, 0);
  best[0] = 0;
  for (std::size_t u = 1; u < states; ++u) {
    const std::uint64_t low = u & (~u + 1);
    const std::uint64_t rest = u ^ low;
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      const std::uint64_t part = t | low;
      if (connected[part]) {
        const int candidate = weight[part] + best[u ^ part];
        if (candidate < best[u]) {
          best[u] = candidate;
          choice[u] = part;
        }
      }
      if (t == 0) break;
    }
  }

  std::vector<VertexSet> parts;
  for (std::uint64_t u = states - 1; u != 0; u ^= choice[u]) parts.emplace_back(choice[u]);
  return parts;
}

}  // namespace

NeoColonization theta_c(const Graph& g) {
  if (g.order() > kMaxThetaCOrder) {
    throw LimitExceeded("theta_c supports at most " + std::to_string(kMaxThetaCOrder) + " vertices");
  }
  std::vector<VertexSet> parts;
  for (VertexSet comp : g.components()) {
    const std::vector<int> members = comp.to_vector();
    for (VertexSet local : colonize_component(g.induced_subgraph(comp))) {
      VertexSet lifted;
      for (int i : local) lifted.insert(members[i]);
      parts.push_back(lifted);
    }
  }
  return make_colonization(g, std::move(parts));
}

StarColonization bipartite_star_colonization(const Graph& g) {
  if (!g.is_bipartite()) throw InvalidArgument("bipartite_star_colonization: graph is not bipartite");
  if (g.has_isolated_vertex()) throw InvalidArgument("bipartite_star_colonization: graph has an isolated vertex");

  const CoverAndMatching cm = vertex_cover_and_matching(g);
  std::vector<int> part_of(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> parts;
  for (const Edge& e : cm.matching) {
    part_of[e.u] = part_of[e.v] = static_cast<int>(parts.size());
    parts.push_back(VertexSet{e.u, e.v});
  }
  int unmatched = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (part_of[v] >= 0) continue;
    ++unmatched;
    // Unmatched vertices lie outside the cover, so every neighbour is a
    // matched cover vertex.
    const int anchor = g.neighbors(v).lowest();
    parts[part_of[anchor]].insert(v);
  }
  return {make_colonization(g, std::move(parts)), cm.cover_size, unmatched};
}

}  // namespace eternal
