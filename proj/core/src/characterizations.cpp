#include "eternal/characterizations.hpp"

#include <algorithm>

#include "eternal/canonical.hpp"
#include "eternal/error.hpp"
#include "eternal/eternal_engine.hpp"
#include "eternal/families.hpp"
#include "eternal/params.hpp"

namespace eternal {

namespace {

std::optional<ClassCCertificate> certify(const Graph& g, VertexSet a, VertexSet b) {
  if (a.size() > b.size() || (a.size() == b.size() && b.lowest() < a.lowest())) std::swap(a, b);
  const int m = a.size();
  if (m < 2) return std::nullopt;

  ClassCCertificate cert{a, b, {}, {}};
  for (int u : a) {
    const VertexSet missing = b - g.neighbors(u);
    if (missing.size() > 1) return std::nullopt;
    if (missing.empty()) continue;
    const int w = missing.lowest();
    if (cert.depleted.contains(w)) return std::nullopt;
    cert.deleted.push_back({u, w});
    cert.depleted.insert(u);
    cert.depleted.insert(w);
  }
  const int l = static_cast<int>(cert.deleted.size());
  if (a.size() < b.size() && l > m - 1) return std::nullopt;
  return cert;
}

void require_bipartite(const Graph& g, const char* who) {
  if (!g.bipartition()) throw InvalidArgument(std::string(who) + ": graph is not bipartite");
}

void require_no_isolated(const Graph& g, const char* who) {
  if (g.has_isolated_vertex()) throw InvalidArgument(std::string(who) + ": graph has an isolated vertex");
}

bool gamma_mm_two(const Graph& g) {
  if (g.order() < 2 || domination_number(g).value != 2) return false;
  return eternal_value(g, GuardModel::all_guards) == 2;
}

}  // namespace

std::optional<ClassCCertificate> class_c_membership(const Graph& g) {
  if (g.order() < 4 || g.has_isolated_vertex()) return std::nullopt;
  const auto parts = g.bipartition();
  if (!parts) return std::nullopt;
  const auto comps = g.components();
  // Only 2K2 is disconnected in the class, so two components is the most to consider.
  if (comps.size() > 2) return std::nullopt;
  if (auto cert = certify(g, parts->left, parts->right)) return cert;
  if (comps.size() == 2) {
    const VertexSet flip = comps[1];
    const VertexSet a = (parts->left - flip) | (parts->right & flip);
    return certify(g, a, g.vertices() - a);
  }
  return std::nullopt;
}

Graph graph_from_certificate(int order, const ClassCCertificate& cert) {
  std::vector<Edge> edges;
  for (int u : cert.a) {
    for (int w : cert.b) {
      const bool removed = std::any_of(cert.deleted.begin(), cert.deleted.end(),
                                       [&](const Edge& e) { return e.u == u && e.v == w; });
      if (!removed) edges.push_back({std::min(u, w), std::max(u, w)});
    }
  }
  return Graph::from_edge_list(order, edges);
}

IffCheck bipartite_two_characterization(const Graph& g) {
  require_bipartite(g, "bipartite_two_characterization");
  return {gamma_mm_two(g), class_c_membership(g).has_value()};
}

IffCheck triangle_free_two_characterization(const Graph& g) {
  if (!g.is_triangle_free()) throw InvalidArgument("triangle_free_two_characterization: graph has a triangle");
  const bool c5 = g.order() == 5 && is_isomorphic(g, cycle(5));
  return {gamma_mm_two(g), c5 || class_c_membership(g).has_value()};
}

bool prop2_condition(const Graph& g) {
  if (g.is_complete()) throw InvalidArgument("prop2_condition: graph is complete");
  return every_vertex_in_k_dominating_set(g, 2).every_vertex;
}

bool prop3_condition(const Graph& g) {
  if (independence_number(g).value != 3) throw InvalidArgument("prop3_condition: independence number is not 3");
  const auto sets = maximum_independent_sets(g);
  for (int v : g.vertices()) {
    const VertexSet closed = g.closed_neighbors(v);
    if (std::all_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.is_subset_of(closed); })) return true;
  }
  return false;
}

bool gamma_half(const Graph& g) {
  require_no_isolated(g, "gamma_half");
  return 2 * domination_number(g).value == g.order();
}

bool is_corona(const Graph& g) {
  if (!g.is_connected(g.vertices())) throw InvalidArgument("is_corona: graph is disconnected");
  const int n = g.order();
  if (n == 2) return true;
  if (n < 4 || n % 2 != 0) return false;
  VertexSet leaves;
  for (int v : g.vertices()) {
    if (g.degree(v) == 1) leaves.insert(v);
  }
  const VertexSet core = g.vertices() - leaves;
  if (leaves.size() != core.size()) return false;
  for (int v : core) {
    if ((g.neighbors(v) & leaves).size() != 1) return false;
  }
  return g.is_connected(core);
}

bool components_are_c4_or_corona(const Graph& g) {
  for (VertexSet comp : g.components()) {
    const Graph h = g.induced_subgraph(comp);
    const bool c4 = h.order() == 4 && h.size() == 4 && h.max_degree() == 2;
    if (!c4 && !is_corona(h)) return false;
  }
  return true;
}

IffCheck bipartite_gamma_eq_eternal(const Graph& g) {
  require_bipartite(g, "bipartite_gamma_eq_eternal");
  require_no_isolated(g, "bipartite_gamma_eq_eternal");
  const int gamma = domination_number(g).value;
  return {gamma == eternal_value(g, GuardModel::one_guard), 2 * gamma == g.order()};
}

}  // namespace eternal
