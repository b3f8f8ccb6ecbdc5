#include "eternal/families.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "eternal/error.hpp"

namespace eternal {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_order(long n) {
  require(n >= 0 && n <= kMaxVertices, "graph would have " + std::to_string(n) + " vertices; limit is 63");
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  require_order(static_cast<long>(ng) * nh);
  std::vector<Edge> edges;
  for (int a = 0; a < ng; ++a) {
    for (int x = 0; x < nh; ++x) {
      const int here = a * nh + x;
      for (int y : h.neighbors(x)) {
        if (x < y) edges.push_back({here, a * nh + y});
      }
      for (int b : g.neighbors(a)) {
        if (a < b) edges.push_back({here, b * nh + x});
      }
    }
  }
  return Graph::from_edge_list(ng * nh, edges);
}

Graph corona(const Graph& g) {
  const int n = g.order();
  require_order(2L * n);
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < n; ++v) edges.push_back({v, n + v});
  return Graph::from_edge_list(2 * n, edges);
}

Graph empty_graph(int n) {
  require_order(n);
  return Graph(n);
}

Graph path(int n) {
  require(n >= 1, "path needs at least one vertex");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  require_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  require_order(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int m, int n) { return kmn_minus_matching(m, n, 0); }

Graph star(int r) {
  require(r >= 1, "star K1,r needs r >= 1");
  return complete_bipartite(1, r);
}

Graph kmn_minus_matching(int m, int n, int removed) {
  require(m >= 1 && n >= 1, "complete bipartite parts must be nonempty");
  require(removed >= 0 && removed <= std::min(m, n), "removed matching larger than min(m, n)");
  require_order(static_cast<long>(m) + n);
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b && a < removed) continue;
      edges.push_back({a, m + b});
    }
  }
  return Graph::from_edge_list(m + n, edges);
}

Graph blown_up_c6(const std::array<int, 6>& sizes) {
  std::array<int, 7> start{};
  for (int i = 0; i < 6; ++i) {
    require(sizes[i] >= 1, "blown-up C6 cliques need at least one vertex");
    start[i + 1] = start[i] + sizes[i];
  }
  require_order(start[6]);
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    const int j = (i + 1) % 6;
    for (int u = start[i]; u < start[i + 1]; ++u) {
      for (int v = u + 1; v < start[i + 1]; ++v) edges.push_back({u, v});
      for (int v = start[j]; v < start[j + 1]; ++v) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(start[6], edges);
}

Graph stems_with_leaves_tree(int k) {
  require(k >= 2, "stems_with_leaves_tree needs k >= 2");
  const int spine = 3 * k - 4;
  require_order(spine + 2L);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  // Stems of P_s are its second and second-to-last vertices; for P2 both ends.
  const std::vector<int> stems = spine == 2 ? std::vector<int>{0, 1} : std::vector<int>{1, spine - 2};
  int next = spine;
  for (int s : stems) edges.push_back({s, next++});
  return Graph::from_edge_list(next, edges);
}

namespace {

std::vector<int> parse_args(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (true) {
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{}) throw InvalidArgument("bad numeric argument in family spec \"" + std::string(spec) + "\"");
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(end - text.data()));
    if (text.empty()) return out;
    if (text.front() != ',') throw InvalidArgument("expected ',' in family spec \"" + std::string(spec) + "\"");
    text.remove_prefix(1);
  }
}

Graph single_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("family spec \"" + std::string(spec) + "\" lacks ':'");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (name == "corona") return corona(single_family(rest));
  const std::vector<int> args = parse_args(rest, spec);
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw InvalidArgument("family \"" + std::string(name) + "\" takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "path") { expect(1); return path(args[0]); }
  if (name == "cycle") { expect(1); return cycle(args[0]); }
  if (name == "complete") { expect(1); return complete(args[0]); }
  if (name == "empty") { expect(1); return empty_graph(args[0]); }
  if (name == "star") { expect(1); return star(args[0]); }
  if (name == "kmn") { expect(2); return complete_bipartite(args[0], args[1]); }
  if (name == "kmn-m") { expect(3); return kmn_minus_matching(args[0], args[1], args[2]); }
  if (name == "stems") { expect(1); return stems_with_leaves_tree(args[0]); }
  if (name == "blowc6") {
    expect(6);
    return blown_up_c6({args[0], args[1], args[2], args[3], args[4], args[5]});
  }
  throw InvalidArgument("unknown family \"" + std::string(name) + "\"");
}

}  // namespace

Graph named_family(std::string_view spec) {
  const auto star_at = spec.rfind('*');
  if (star_at != std::string_view::npos) {
    return cartesian_product(named_family(spec.substr(0, star_at)), single_family(spec.substr(star_at + 1)));
  }
  return single_family(spec);
}

}  // namespace eternal
