#include "eternal/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "eternal/canonical.hpp"
#include "eternal/characterizations.hpp"
#include "eternal/error.hpp"
#include "eternal/eternal_engine.hpp"
#include "eternal/families.hpp"
#include "eternal/graph6.hpp"
#include "eternal/params.hpp"
#include "eternal/partition_cover.hpp"
#include "eternal/tree_reduction.hpp"

namespace eternal {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

constexpr int kMaxProductOrder = 12;

std::string range_text(const char* what, int lo, int hi) {
  return std::string("all ") + what + " " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
}

SolveControl control_for(const HarnessOptions& options) {
  SolveControl c;
  c.deadline = options.deadline;
  return c;
}

void check_deadline(const HarnessOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) throw LimitExceeded("time budget exhausted");
}

// Evaluates fn(0..count-1) on up to `jobs` threads; results stay in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t begin, std::size_t end, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(end - begin);
  if (jobs <= 1 || end - begin <= 1) {
    for (std::size_t i = begin; i < end; ++i) out[i - begin] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < end; i = next++) {
      try {
        out[i - begin] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = end;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(end - begin));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Per-graph parameters, computed on first use.
class Params {
 public:
  Params(const Graph& g, SolveControl control) : g_(g), control_(std::move(control)) {}

  int gamma() { return get(gamma_, [&] { return domination_number(g_).value; }); }
  int alpha() { return get(alpha_, [&] { return independence_number(g_).value; }); }
  int theta() { return get(theta_, [&] { return clique_cover_number(g_).value; }); }
  int gamma_inf() { return get(gamma_inf_, [&] { return eternal_value(g_, GuardModel::one_guard, control_); }); }
  int gamma_m_inf() { return get(gamma_m_, [&] { return eternal_value(g_, GuardModel::all_guards, control_); }); }
  int theta_c() { return get(theta_c_, [&] { return eternal::theta_c(g_).total; }); }
  int gamma_c() { return get(gamma_c_, [&] { return connected_domination_number(g_).value; }); }

  const SolveControl& control() const { return control_; }

 private:
  template <typename F>
  int get(std::optional<int>& slot, F compute) {
    if (!slot) slot = compute();
    return *slot;
  }

  const Graph& g_;
  SolveControl control_;
  std::optional<int> gamma_, alpha_, theta_, gamma_inf_, gamma_m_, theta_c_, gamma_c_;
};

struct Verdict {
  bool applicable = false;
  std::optional<std::string> violation;
};

Verdict skip() { return {}; }
Verdict holds_if(bool ok, const std::function<std::string()>& details) {
  Verdict v{true, std::nullopt};
  if (!ok) v.violation = details();
  return v;
}

std::string kv(std::initializer_list<std::pair<const char*, int>> items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

bool bipartite(const Graph& g) { return g.bipartition().has_value(); }
bool no_isolated(const Graph& g) { return !g.has_isolated_vertex(); }

using CheckFn = std::function<Verdict(const Graph&, Params&)>;

Verdict check_fact1(const Graph&, Params& p) {
  const bool ok = p.gamma() <= p.alpha() && p.alpha() <= p.gamma_inf() && p.gamma_inf() <= p.theta();
  return holds_if(ok, [&] {
    return kv({{"gamma", p.gamma()}, {"alpha", p.alpha()}, {"gamma_inf", p.gamma_inf()}, {"theta", p.theta()}});
  });
}

Verdict check_ghh1(const Graph&, Params& p) {
  const bool ok = p.gamma() <= p.gamma_m_inf() && p.gamma_m_inf() <= p.alpha();
  return holds_if(ok, [&] { return kv({{"gamma", p.gamma()}, {"gamma_m_inf", p.gamma_m_inf()}, {"alpha", p.alpha()}}); });
}

Verdict check_km_binomial(const Graph&, Params& p) {
  const int bound = p.alpha() * (p.alpha() + 1) / 2;
  return holds_if(p.gamma_inf() <= bound, [&] { return kv({{"gamma_inf", p.gamma_inf()}, {"bound", bound}}); });
}

Verdict check_thetac_bounds(const Graph& g, Params& p) {
  if (g.order() == 0 || !g.is_connected(g.vertices())) return skip();
  const bool ok = p.gamma_m_inf() <= p.theta_c() && p.theta_c() <= p.gamma_c() + 1;
  return holds_if(ok, [&] {
    return kv({{"gamma_m_inf", p.gamma_m_inf()}, {"theta_c", p.theta_c()}, {"gamma_c", p.gamma_c()}});
  });
}

Verdict check_trees_thetac(const Graph& g, Params& p) {
  if (!g.is_tree()) return skip();
  const int reduced = reduce_tree(g).value;
  const bool ok = p.gamma_m_inf() == p.theta_c() && reduced == p.theta_c();
  return holds_if(ok, [&] {
    return kv({{"gamma_m_inf", p.gamma_m_inf()}, {"theta_c", p.theta_c()}, {"reduce_tree", reduced}});
  });
}

Verdict check_bipartite_eq(const Graph& g, Params&) {
  if (!bipartite(g) || !no_isolated(g)) return skip();
  const IffCheck r = bipartite_gamma_eq_eternal(g);
  return holds_if(r.holds(), [&] { return kv({{"gamma_eq_gamma_inf", r.lhs}, {"gamma_eq_half_n", r.rhs}}); });
}

Verdict check_bipartite_2(const Graph& g, Params&) {
  if (!bipartite(g) || !no_isolated(g)) return skip();
  const IffCheck r = bipartite_two_characterization(g);
  return holds_if(r.holds(), [&] { return kv({{"gamma_eq_gamma_m_inf_eq_2", r.lhs}, {"in_class_c", r.rhs}}); });
}

Verdict check_tfree_2(const Graph& g, Params&) {
  if (!g.is_triangle_free() || !no_isolated(g)) return skip();
  const IffCheck r = triangle_free_two_characterization(g);
  return holds_if(r.holds(), [&] { return kv({{"gamma_eq_gamma_m_inf_eq_2", r.lhs}, {"c5_or_class_c", r.rhs}}); });
}

Verdict check_trees_theta(const Graph& g, Params& p) {
  if (!g.is_tree() || g.order() < 2) return skip();
  const int reduced = reduce_tree(g).value;
  const int theta_tree = tree_clique_cover(g);
  const bool r2 = r2_reduces_to_small_star(g).reducible;
  const bool ok = reduced == p.gamma_m_inf() && theta_tree == p.theta() && r2 == (reduced == theta_tree);
  return holds_if(ok, [&] {
    return kv({{"reduce_tree", reduced},
               {"gamma_m_inf", p.gamma_m_inf()},
               {"n_minus_nu", theta_tree},
               {"theta", p.theta()},
               {"r2_reducible", r2}});
  });
}

Verdict check_delta3_theta(const Graph& g, Params& p) {
  if (g.max_degree() > 3 || p.gamma() != p.gamma_inf()) return skip();
  return holds_if(p.gamma_inf() == p.theta(), [&] { return kv({{"gamma_inf", p.gamma_inf()}, {"theta", p.theta()}}); });
}

Verdict check_cork3(const Graph& g, Params& p) {
  if (!g.is_triangle_free() || g.min_degree() < 1 || g.max_degree() > 3) return skip();
  const bool lhs = p.gamma() == p.gamma_inf();
  const bool rhs = 2 * p.gamma() == g.order();
  return holds_if(lhs == rhs, [&] { return kv({{"gamma", p.gamma()}, {"gamma_inf", p.gamma_inf()}, {"n", g.order()}}); });
}

Verdict check_tfree_theta(const Graph& g, Params& p) {
  if (!g.is_triangle_free() || p.gamma() != p.gamma_inf()) return skip();
  return holds_if(p.gamma_inf() == p.theta(), [&] { return kv({{"gamma_inf", p.gamma_inf()}, {"theta", p.theta()}}); });
}

Verdict check_fact_eds(const Graph& g, Params& p) {
  if (g.order() == 0) return skip();
  const EternalResult r = eternal_domination_number(g, p.control());
  const auto bad = verify_fact_eds(g, r.family);
  return holds_if(bad.empty(), [&] { return to_string(bad.front().configuration) + ": " + bad.front().details; });
}

Verdict check_lemma_epn(const Graph& g, Params& p) {
  if (g.order() == 0 || !no_isolated(g)) return skip();
  const bool lemma2 = g.max_degree() <= 3;
  const bool lemma3 = g.is_triangle_free();
  if (!lemma2 && !lemma3) return skip();
  if (p.gamma() != p.gamma_inf()) return skip();
  const bool found = exists_epn_full_minimum_eds(g, p.control()).has_value();
  return holds_if(found, [&] {
    return std::string("no minimum EDS with every epn nonempty (") + (lemma2 ? "max degree <= 3" : "triangle-free") + ")";
  });
}

struct TheoremSpec {
  RegistryEntry entry;
  CheckFn fn;
};

const std::vector<TheoremSpec>& theorem_specs() {
  static const std::vector<TheoremSpec> specs = {
      {{"FACT1_CHAIN", "gamma <= alpha <= gamma_inf <= theta", true, UniverseKind::graphs, 6}, check_fact1},
      {{"GHH1", "gamma <= gamma_m_inf <= alpha", true, UniverseKind::graphs, 6}, check_ghh1},
      {{"KM_BINOMIAL", "gamma_inf <= C(alpha + 1, 2)", true, UniverseKind::graphs, 6}, check_km_binomial},
      {{"THETAC_BOUNDS", "connected: gamma_m_inf <= theta_c <= gamma_c + 1", true, UniverseKind::graphs, 6},
       check_thetac_bounds},
      {{"TREES_THETAC", "trees: gamma_m_inf = theta_c", true, UniverseKind::trees, 12}, check_trees_thetac},
      {{"BIPARTITE_EQ", "bipartite, no isolated vertices: gamma = gamma_inf iff gamma = n/2", true,
        UniverseKind::graphs, 7},
       check_bipartite_eq},
      {{"BIPARTITE_2", "bipartite, no isolated vertices: gamma = gamma_m_inf = 2 iff G in class C", true,
        UniverseKind::graphs, 7},
       check_bipartite_2},
      {{"TFREE_2", "triangle-free, no isolated vertices: gamma = gamma_m_inf = 2 iff G = C5 or G in class C", true,
        UniverseKind::graphs, 7},
       check_tfree_2},
      {{"TREES_THETA", "trees n >= 2: R2 reduces T to K2 or K1,2 iff gamma_m_inf = theta", true, UniverseKind::trees,
        12},
       check_trees_theta},
      {{"DELTA3_THETA", "max degree <= 3 and gamma = gamma_inf: gamma_inf = theta", true, UniverseKind::graphs, 6},
       check_delta3_theta},
      {{"CORK3", "triangle-free, 1 <= min degree <= max degree <= 3: gamma = gamma_inf iff gamma = n/2", true,
        UniverseKind::graphs, 7},
       check_cork3},
      {{"TFREE_THETA", "triangle-free and gamma = gamma_inf: gamma_inf = theta", true, UniverseKind::graphs, 6},
       check_tfree_theta},
      {{"FACT_EDS", "every member of the safe family at gamma_inf satisfies the epn clique conditions", true,
        UniverseKind::graphs, 6},
       check_fact_eds},
      {{"LEMMA_EPN",
        "no isolated vertices, gamma = gamma_inf, and max degree <= 3 or triangle-free: some minimum EDS has "
        "every epn nonempty",
        true, UniverseKind::graphs, 6},
       check_lemma_epn},
  };
  return specs;
}

const TheoremSpec* find_spec(std::string_view id) {
  for (const auto& s : theorem_specs()) {
    if (s.entry.id == id) return &s;
  }
  return nullptr;
}

std::string known_ids() {
  std::string out;
  for (const auto& e : theorem_registry()) out += (out.empty() ? "" : ", ") + e.id;
  for (const auto& e : question_registry()) out += ", " + e.id;
  return out;
}

[[noreturn]] void unknown_id(std::string_view id) {
  throw InvalidArgument("unknown theorem or question id '" + std::string(id) + "' (known: " + known_ids() + ")");
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Search items: a graph plus how it was built.
struct Item {
  Graph graph;
  std::string label;
};

using SearchFn = std::function<std::optional<std::string>(const Item&, const SolveControl&)>;

std::vector<Item> graph_items(int n_min, int n_max, bool triangle_free_only) {
  std::vector<Item> items;
  for (const Graph& g : all_graphs(n_min, n_max).graphs) {
    if (triangle_free_only && !g.is_triangle_free()) continue;
    items.push_back({g, to_graph6(g)});
  }
  return items;
}

void require_product_cap(int n_max) {
  if (n_max > kMaxProductOrder) {
    throw LimitExceeded("product universes are limited to " + std::to_string(kMaxProductOrder) + " vertices");
  }
}

// Unordered pairs of non-isomorphic graphs on at least two vertices with
// |V(G)| * |V(H)| <= n_max.
std::vector<Item> product_pair_items(int n_max) {
  std::vector<Item> items;
  std::vector<std::pair<Graph, std::string>> factors;
  for (int n = 2; n <= std::min(n_max / 2, kMaxEnumeratedOrder); ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) factors.emplace_back(g, to_graph6(g));
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      const auto& [g, gs] = factors[i];
      const auto& [h, hs] = factors[j];
      if (g.order() * h.order() > n_max) continue;
      items.push_back({cartesian_product(g, h), gs + " x " + hs});
    }
  }
  return items;
}

const std::vector<std::pair<std::string, Graph>>& named_factors() {
  static const std::vector<std::pair<std::string, Graph>> f = {
      {"P2", path(2)}, {"P3", path(3)}, {"C3", cycle(3)}, {"C4", cycle(4)}, {"P4", path(4)}};
  return f;
}

struct SearchSpec {
  RegistryEntry entry;
  std::function<std::vector<Item>(int n_max, std::string& description, std::vector<std::string>& notes)> universe;
  SearchFn fn;
};

std::optional<std::string> q_main1(const Item& item, const SolveControl& c) {
  Params p(item.graph, c);
  if (p.gamma() == p.gamma_inf() && p.gamma() < p.theta()) {
    return kv({{"gamma", p.gamma()}, {"gamma_inf", p.gamma_inf()}, {"theta", p.theta()}});
  }
  return std::nullopt;
}

std::optional<std::string> q_main2(const Item& item, const SolveControl& c) {
  Params p(item.graph, c);
  if (p.gamma_inf() == p.alpha() && p.alpha() < p.theta()) {
    return kv({{"gamma_inf", p.gamma_inf()}, {"alpha", p.alpha()}, {"theta", p.theta()}});
  }
  return std::nullopt;
}

std::optional<std::string> conj_c1(const Item& item, const SolveControl& c) {
  Params p(item.graph, c);
  if (p.theta() != p.gamma_inf()) return std::nullopt;
  const Graph prod = cartesian_product(item.graph, complete(2));
  Params q(prod, c);
  if (q.theta() != q.gamma_inf()) {
    return "theta(G)=gamma_inf(G)=" + std::to_string(p.theta()) + " but " +
           kv({{"theta(GxK2)", q.theta()}, {"gamma_inf(GxK2)", q.gamma_inf()}});
  }
  return std::nullopt;
}

std::optional<std::string> vizing_ed(const Item& item, const SolveControl& c) {
  // The label records the factors; recover them from the graph6 strings.
  const auto sep = item.label.find(" x ");
  const Graph g = parse_graph6(item.label.substr(0, sep));
  const Graph h = parse_graph6(item.label.substr(sep + 3));
  const int lhs = eternal_value(item.graph, GuardModel::one_guard, c);
  const int a = eternal_value(g, GuardModel::one_guard, c);
  const int b = eternal_value(h, GuardModel::one_guard, c);
  if (lhs < a * b) return item.label + ": " + kv({{"gamma_inf(GxH)", lhs}, {"gamma_inf(G)", a}, {"gamma_inf(H)", b}});
  return std::nullopt;
}

std::optional<std::string> fig1_witness(const Item& item, const SolveControl& c) {
  const Graph& g = item.graph;
  if (g.order() < 2 || independence_number(g).value != 3) return std::nullopt;
  for (VertexSet s : maximum_independent_sets(g)) {
    VertexSet common = g.vertices();
    for (int v : s) common &= g.neighbors(v);
    if (common.empty()) return std::nullopt;
  }
  const KDominationCoverage cov = every_vertex_in_k_dominating_set(g, 2);
  if (cov.every_vertex) return std::nullopt;
  const int gm = eternal_value(g, GuardModel::all_guards, c);
  return "alpha=3, every independent triple has a common neighbour, vertex " + std::to_string(cov.uncovered.lowest()) +
         " lies in no dominating 2-set, gamma_m_inf=" + std::to_string(gm);
}

const std::vector<SearchSpec>& search_specs() {
  static const std::vector<SearchSpec> specs = {
      {{"Q_MAIN1", "is there G with gamma = gamma_inf < theta?", false, UniverseKind::graphs, 6},
       [](int n_max, std::string& d, std::vector<std::string>&) {
         d = range_text("graphs", 1, n_max);
         return graph_items(1, n_max, false);
       },
       q_main1},
      {{"Q_MAIN2", "is there a triangle-free G with gamma_inf = alpha < theta?", false, UniverseKind::graphs, 7},
       [](int n_max, std::string& d, std::vector<std::string>&) {
         d = range_text("triangle-free graphs", 1, n_max);
         return graph_items(1, n_max, true);
       },
       q_main2},
      {{"CONJ_C1", "theta(G) = gamma_inf(G) implies theta(G x K2) = gamma_inf(G x K2)", false, UniverseKind::graphs,
        5},
       [](int n_max, std::string& d, std::vector<std::string>&) {
         require_product_cap(2 * n_max);
         d = range_text("graphs", 1, n_max) + " with theta = gamma_inf, times K2";
         return graph_items(1, n_max, false);
       },
       conj_c1},
      {{"VIZING_ED", "gamma_inf(G x H) >= gamma_inf(G) * gamma_inf(H)", false, UniverseKind::products, 12},
       [](int n_max, std::string& d, std::vector<std::string>&) {
         require_product_cap(n_max);
         d = "all pairs of graphs on >= 2 vertices with at most " + std::to_string(n_max) + " product vertices";
         return product_pair_items(n_max);
       },
       vizing_ed},
      {{"VIZING_MED_MAX",
        "gamma_m_inf(G x H) >= max(gamma_m_inf(G) * gamma(H), gamma(G) * gamma_m_inf(H))", false,
        UniverseKind::products, 12},
       [](int n_max, std::string& d, std::vector<std::string>& notes) {
         require_product_cap(n_max);
         d = "pairs from {P2, P3, C3, C4, P4} with at most " + std::to_string(n_max) + " product vertices";
         std::vector<Item> items;
         const auto& f = named_factors();
         for (std::size_t i = 0; i < f.size(); ++i) {
           for (std::size_t j = i; j < f.size(); ++j) {
             const std::string label = f[i].first + " x " + f[j].first;
             if (f[i].second.order() * f[j].second.order() > n_max) {
               notes.push_back("skipped " + label + " (over the product cap)");
               continue;
             }
             items.push_back({cartesian_product(f[i].second, f[j].second), label});
           }
         }
         return items;
       },
       nullptr},
      {{"FIG1_WITNESS",
        "alpha = 3, every independent triple has a common neighbour, some vertex in no dominating 2-set", false,
        UniverseKind::graphs, 7},
       [](int n_max, std::string& d, std::vector<std::string>&) {
         d = range_text("graphs", 1, n_max);
         return graph_items(1, n_max, false);
       },
       fig1_witness},
  };
  return specs;
}

const Graph& named_factor(std::string_view name) {
  for (const auto& [n, g] : named_factors()) {
    if (n == name) return g;
  }
  throw Error("internal: unknown factor " + std::string(name));
}

// VIZING_MED_MAX also logs failures of the plain product bound, which are expected.
SearchFn med_max_fn(std::vector<std::string>& notes, std::mutex& mu) {
  return [&notes, &mu](const Item& item, const SolveControl& c) -> std::optional<std::string> {
    const auto sep = item.label.find(" x ");
    const Graph& g = named_factor(item.label.substr(0, sep));
    const Graph& h = named_factor(item.label.substr(sep + 3));
    const int prod = eternal_value(item.graph, GuardModel::all_guards, c);
    const int gm = eternal_value(g, GuardModel::all_guards, c);
    const int hm = eternal_value(h, GuardModel::all_guards, c);
    const int gd = domination_number(g).value;
    const int hd = domination_number(h).value;
    if (prod < gm * hm) {
      std::lock_guard lock(mu);
      notes.push_back("strict product bound fails on " + item.label + ": gamma_m_inf = " + std::to_string(prod) +
                      " < " + std::to_string(gm * hm));
    }
    const int bound = std::max(gm * hd, gd * hm);
    if (prod < bound) return item.label + ": " + kv({{"gamma_m_inf(GxH)", prod}, {"bound", bound}});
    return std::nullopt;
  };
}

void finish(TheoremReport& r, bool proven, Clock::time_point start) {
  r.elapsed_seconds = seconds_since(start);
  if (!r.violations.empty()) {
    r.status = ReportStatus::counterexample;
  } else {
    r.status = proven ? ReportStatus::verified : ReportStatus::exploratory_none_found;
  }
}

json set_json(VertexSet s) { return json(s.to_vector()); }

json parts_json(const std::vector<VertexSet>& parts) {
  json out = json::array();
  for (VertexSet p : parts) out.push_back(set_json(p));
  return out;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

Universe all_graphs(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("all_graphs: empty order range");
  Universe u{range_text("graphs", n_min, n_max), {}};
  for (int n = n_min; n <= n_max; ++n) {
    const auto& gs = enumerate_nonisomorphic(n);
    u.graphs.insert(u.graphs.end(), gs.begin(), gs.end());
  }
  return u;
}

Universe all_trees(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("all_trees: empty order range");
  Universe u{range_text("trees", n_min, n_max), {}};
  for (int n = n_min; n <= n_max; ++n) {
    const auto& ts = enumerate_trees(n);
    u.graphs.insert(u.graphs.end(), ts.begin(), ts.end());
  }
  return u;
}

Universe single_graph(const Graph& g, std::string description) { return {std::move(description), {g}}; }

std::string_view to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::verified:
      return "verified";
    case ReportStatus::counterexample:
      return "counterexample";
    case ReportStatus::exploratory_none_found:
      return "exploratory-none-found";
  }
  return "?";
}

const std::vector<RegistryEntry>& theorem_registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    for (const auto& s : theorem_specs()) out.push_back(s.entry);
    return out;
  }();
  return entries;
}

const std::vector<RegistryEntry>& question_registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    for (const auto& s : search_specs()) out.push_back(s.entry);
    return out;
  }();
  return entries;
}

const RegistryEntry* find_entry(std::string_view id) {
  for (const auto& e : theorem_registry()) {
    if (e.id == id) return &e;
  }
  for (const auto& e : question_registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Universe universe_for(std::string_view id, int n_max) {
  const RegistryEntry* e = find_entry(id);
  if (!e) unknown_id(id);
  if (e->kind == UniverseKind::trees) return all_trees(1, n_max);
  if (e->kind == UniverseKind::graphs) return all_graphs(1, n_max);
  throw InvalidArgument(std::string(id) + " builds its own product universe");
}

TheoremReport check(std::string_view id, const Universe& universe, const HarnessOptions& options) {
  const TheoremSpec* spec = find_spec(id);
  if (!spec) unknown_id(id);
  if (universe.graphs.empty()) throw InvalidArgument("check: empty universe");
  const auto start = Clock::now();
  const SolveControl control = control_for(options);

  const auto verdicts = parallel_map<Verdict>(0, universe.graphs.size(), options.jobs, [&](std::size_t i) {
    check_deadline(options);
    Params p(universe.graphs[i], control);
    return spec->fn(universe.graphs[i], p);
  });

  TheoremReport r;
  r.theorem = spec->entry.id;
  r.universe = universe.description;
  r.checked = static_cast<long>(universe.graphs.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (!verdicts[i].applicable) continue;
    ++r.hypothesis_met;
    if (verdicts[i].violation) r.violations.push_back({to_graph6(universe.graphs[i]), *verdicts[i].violation});
  }
  finish(r, spec->entry.proven, start);
  return r;
}

SearchResult search_counterexample(std::string_view id, int n_max, const HarnessOptions& options) {
  const SearchSpec* spec = nullptr;
  for (const auto& s : search_specs()) {
    if (s.entry.id == id) spec = &s;
  }
  if (!spec) {
    if (find_spec(id)) throw InvalidArgument(std::string(id) + " is a theorem; use check");
    unknown_id(id);
  }
  if (n_max < 1) throw InvalidArgument("search: n_max must be positive");
  const auto start = Clock::now();
  const SolveControl control = control_for(options);

  TheoremReport r;
  r.theorem = spec->entry.id;
  std::mutex notes_mu;
  const std::vector<Item> items = spec->universe(n_max, r.universe, r.notes);
  const SearchFn fn = spec->fn ? spec->fn : med_max_fn(r.notes, notes_mu);

  SearchResult out;
  // Blocks keep the first hit in enumeration order while still allowing early exit.
  const std::size_t block = static_cast<std::size_t>(std::max(1, options.jobs)) * 16;
  for (std::size_t lo = 0; lo < items.size() && !out.witness; lo += block) {
    const std::size_t hi = std::min(items.size(), lo + block);
    const auto hits = parallel_map<std::optional<std::string>>(lo, hi, options.jobs, [&](std::size_t i) {
      check_deadline(options);
      return fn(items[i], control);
    });
    for (std::size_t i = 0; i < hits.size(); ++i) {
      r.checked = static_cast<long>(lo + i + 1);
      if (hits[i]) {
        out.witness = items[lo + i].graph;
        out.details = *hits[i];
        r.violations.push_back({to_graph6(items[lo + i].graph), *hits[i]});
        break;
      }
    }
  }
  if (!out.witness) r.checked = static_cast<long>(items.size());
  r.hypothesis_met = r.checked;
  std::sort(r.notes.begin(), r.notes.end());
  finish(r, false, start);
  out.report = std::move(r);
  return out;
}

ParamReport compute_params(const Graph& g, const HarnessOptions& options) {
  ParamReport row;
  row.graph6 = to_graph6(g);
  row.order = g.order();
  row.size = g.size();
  const SolveControl control = control_for(options);
  auto attempt = [&](const char* name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      row.errors.push_back(std::string(name) + ": " + e.what());
    }
  };
  attempt("gamma", [&] {
    const auto r = domination_number(g);
    row.gamma = r.value;
    row.gamma_witness = r.witness;
  });
  attempt("alpha", [&] {
    const auto r = independence_number(g);
    row.alpha = r.value;
    row.alpha_witness = r.witness;
  });
  attempt("theta", [&] {
    const auto r = clique_cover_number(g);
    row.theta = r.value;
    row.theta_parts = r.parts;
  });
  attempt("nu", [&] { row.matching = maximum_matching_size(g); });
  attempt("gamma_inf", [&] { row.gamma_inf = eternal_value(g, GuardModel::one_guard, control); });
  attempt("gamma_m_inf", [&] { row.gamma_m_inf = eternal_value(g, GuardModel::all_guards, control); });
  attempt("theta_c", [&] {
    const auto r = theta_c(g);
    row.theta_c = r.total;
    row.theta_c_parts = r.parts;
  });
  if (g.order() > 0 && g.is_connected(g.vertices())) {
    attempt("gamma_c", [&] {
      const auto r = connected_domination_number(g);
      row.gamma_c = r.value;
      row.gamma_c_witness = r.witness;
    });
  }
  return row;
}

std::vector<ParamReport> parameter_sweep(const Universe& universe, const HarnessOptions& options) {
  std::vector<std::size_t> order(universe.graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const bool canonizable = std::all_of(universe.graphs.begin(), universe.graphs.end(),
                                       [](const Graph& g) { return g.order() <= kMaxCanonicalOrder; });
  if (canonizable) {
    std::vector<CanonicalForm> forms;
    for (const Graph& g : universe.graphs) forms.push_back(canonical_form(g));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return forms[a] < forms[b]; });
  }
  return parallel_map<ParamReport>(0, order.size(), options.jobs, [&](std::size_t i) {
    check_deadline(options);
    return compute_params(universe.graphs[order[i]], options);
  });
}

std::string to_json(const TheoremReport& r, int indent) {
  json j;
  j["theorem"] = r.theorem;
  j["universe"] = r.universe;
  j["checked"] = r.checked;
  j["hypothesis_met"] = r.hypothesis_met;
  j["violations"] = json::array();
  for (const Violation& v : r.violations) j["violations"].push_back({{"graph6", v.graph6}, {"details", v.details}});
  j["status"] = std::string(to_string(r.status));
  j["notes"] = r.notes;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump(indent);
}

std::string to_text(const TheoremReport& r) {
  std::string out = r.theorem + ": " + std::string(to_string(r.status)) + "\n";
  out += "  universe: " + r.universe + "\n";
  out += "  checked: " + std::to_string(r.checked) + " (hypothesis met: " + std::to_string(r.hypothesis_met) + ")\n";
  out += "  violations: " + std::to_string(r.violations.size()) + "\n";
  for (const Violation& v : r.violations) out += "    " + v.graph6 + "  " + v.details + "\n";
  for (const std::string& n : r.notes) out += "  note: " + n + "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_seconds);
  out += "  elapsed: " + std::string(buf) + " s\n";
  return out;
}

namespace {

json row_json(const ParamReport& p) {
  json j;
  j["graph6"] = p.graph6;
  j["n"] = p.order;
  j["m"] = p.size;
  auto put = [&](const char* key, const std::optional<int>& v) { j[key] = v ? json(*v) : json(nullptr); };
  put("gamma", p.gamma);
  put("gamma_m_inf", p.gamma_m_inf);
  put("alpha", p.alpha);
  put("gamma_inf", p.gamma_inf);
  put("theta", p.theta);
  put("theta_c", p.theta_c);
  put("gamma_c", p.gamma_c);
  put("nu", p.matching);
  json w = json::object();
  if (p.gamma_witness) w["gamma"] = set_json(*p.gamma_witness);
  if (p.alpha_witness) w["alpha"] = set_json(*p.alpha_witness);
  if (!p.theta_parts.empty()) w["theta"] = parts_json(p.theta_parts);
  if (!p.theta_c_parts.empty()) w["theta_c"] = parts_json(p.theta_c_parts);
  if (p.gamma_c_witness) w["gamma_c"] = set_json(*p.gamma_c_witness);
  j["witnesses"] = w;
  j["errors"] = p.errors;
  return j;
}

}  // namespace

std::string to_json(const ParamReport& row, int indent) { return row_json(row).dump(indent); }

std::string to_json(const std::vector<ParamReport>& rows, int indent) {
  json out = json::array();
  for (const ParamReport& p : rows) out.push_back(row_json(p));
  return out.dump(indent);
}

std::string to_text(const std::vector<ParamReport>& rows) {
  const std::vector<std::string> head = {"graph6", "n", "m", "gamma", "gamma_m_inf", "alpha",
                                         "gamma_inf", "theta", "theta_c", "gamma_c", "nu"};
  std::vector<std::vector<std::string>> cells{head};
  for (const ParamReport& p : rows) {
    cells.push_back({p.graph6, std::to_string(p.order), std::to_string(p.size), opt_text(p.gamma),
                     opt_text(p.gamma_m_inf), opt_text(p.alpha), opt_text(p.gamma_inf), opt_text(p.theta),
                     opt_text(p.theta_c), opt_text(p.gamma_c), opt_text(p.matching)});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      const std::string& cell = cells[r][c];
      if (c == 0) {
        line += cell + std::string(width[c] - cell.size(), ' ');
      } else {
        line += "  " + std::string(width[c] - cell.size(), ' ') + cell;
      }
    }
    out += line + "\n";
    if (r > 0) {
      for (const std::string& e : rows[r - 1].errors) out += "  ! " + e + "\n";
    }
  }
  return out;
}

}  // namespace eternal
