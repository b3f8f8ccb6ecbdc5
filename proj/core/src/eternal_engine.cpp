#include "eternal/eternal_engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "eternal/error.hpp"
#include "eternal/params.hpp"

namespace eternal {

std::string_view to_string(GuardModel model) {
  return model == GuardModel::one_guard ? "one-guard" : "all-guards";
}

GuardModel parse_guard_model(std::string_view text) {
  if (text == "one-guard" || text == "one" || text == "eds") return GuardModel::one_guard;
  if (text == "all-guards" || text == "all" || text == "m-eds") return GuardModel::all_guards;
  throw InvalidArgument("unknown guard model \"" + std::string(text) + "\" (use one-guard or all-guards)");
}

bool SafeFamily::contains(VertexSet config) const {
  return std::binary_search(members.begin(), members.end(), config);
}

std::optional<VertexSet> DefenseStrategy::respond(VertexSet config, int attack) const {
  const auto it = table_.find({config, attack});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool transition_feasible(const Graph& g, VertexSet from, VertexSet to) {
  if (from.size() != to.size()) {
    throw InvalidArgument("transition_feasible: configurations of different sizes");
  }
  // Augmenting paths: guard u may take target w iff w is in N[u].
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  auto augment = [&](auto&& self, int u, VertexSet& visited) -> bool {
    for (int w : g.closed_neighbors(u) & to) {
      if (visited.contains(w)) continue;
      visited.insert(w);
      if (owner[w] < 0 || self(self, owner[w], visited)) {
        owner[w] = u;
        return true;
      }
    }
    return false;
  };
  for (int u : from) {
    VertexSet visited;
    if (!augment(augment, u, visited)) return false;
  }
  return true;
}

namespace {

void assign_moves(const Graph& g, const std::vector<int>& guards, std::size_t i, VertexSet taken,
                  std::vector<VertexSet>& out) {
  if (i == guards.size()) {
    out.push_back(taken);
    return;
  }
  for (int w : g.closed_neighbors(guards[i]) - taken) assign_moves(g, guards, i + 1, taken.with(w), out);
}

// All-guards successors by enumerating each guard's destination.
std::vector<VertexSet> successors_by_moves(const Graph& g, VertexSet from) {
  std::vector<VertexSet> out;
  assign_moves(g, from.to_vector(), 0, VertexSet{}, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All-guards successors by testing every k-subset of N[from] for a matching.
std::vector<VertexSet> successors_by_matching(const Graph& g, VertexSet from) {
  const std::vector<int> reach = g.closed_neighbors(from).to_vector();
  std::vector<VertexSet> out;
  for_each_subset_of_size(static_cast<int>(reach.size()), from.size(), [&](VertexSet local) {
    VertexSet to;
    for (int i : local) to.insert(reach[i]);
    if (transition_feasible(g, from, to)) out.push_back(to);
  });
  std::sort(out.begin(), out.end());
  return out;
}

double move_enumeration_cost(const Graph& g, VertexSet from) {
  double cost = 1.0;
  for (int u : from) cost *= g.degree(u) + 1;
  return cost;
}

double matching_enumeration_cost(const Graph& g, VertexSet from) {
  const double k = from.size();
  return binomial_estimate(g.closed_neighbors(from).size(), from.size()) * (k * k + 1.0);
}

void check_deadline(const SolveControl& control) {
  if (control.deadline && std::chrono::steady_clock::now() > *control.deadline) {
    throw LimitExceeded("time budget exhausted during the safe-family fixed point");
  }
}

// Mask -> member index, dense for small graphs.
class ConfigIndex {
 public:
  ConfigIndex(int n, const std::vector<VertexSet>& members) {
    if (n <= kDenseLimit) {
      dense_.assign(std::size_t{1} << n, -1);
      for (std::size_t i = 0; i < members.size(); ++i) dense_[members[i].bits()] = static_cast<int>(i);
    } else {
      sparse_.reserve(members.size() * 2);
      for (std::size_t i = 0; i < members.size(); ++i) sparse_.emplace(members[i].bits(), static_cast<int>(i));
    }
  }

  int find(VertexSet s) const {
    if (!dense_.empty()) return dense_[s.bits()];
    const auto it = sparse_.find(s.bits());
    return it == sparse_.end() ? -1 : it->second;
  }

 private:
  static constexpr int kDenseLimit = 20;
  std::vector<int> dense_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

SafeFamily solve_component_value(const Graph& h, GuardModel model, const SolveControl& control, int& value) {
  int lower = 0;
  int upper = 0;
  if (model == GuardModel::one_guard) {
    lower = independence_number(h).value;
    upper = clique_cover_number(h).value;
  } else {
    lower = domination_number(h).value;
    upper = independence_number(h).value;
  }
  for (int k = lower; k <= upper; ++k) {
    SafeFamily family = safe_family(h, k, model, control);
    if (!family.empty()) {
      value = k;
      return family;
    }
  }
  throw Error("internal: no safe family between the lower and upper bounds");
}

EternalResult solve(const Graph& g, GuardModel model, const SolveControl& control) {
  if (g.order() == 0) return {0, SafeFamily{0, model, {VertexSet{}}}};
  const auto comps = g.components();
  if (comps.size() == 1) {
    EternalResult out;
    out.family = solve_component_value(g, model, control, out.value);
    return out;
  }
  const int total = eternal_value(g, model, control);
  return {total, safe_family(g, total, model, control)};
}

}  // namespace

std::vector<VertexSet> move_successors(const Graph& g, VertexSet from, GuardModel model) {
  if (model == GuardModel::all_guards) {
    return move_enumeration_cost(g, from) <= matching_enumeration_cost(g, from) ? successors_by_moves(g, from)
                                                                                : successors_by_matching(g, from);
  }
  std::vector<VertexSet> out;
  for (int v : from) {
    for (int r : g.neighbors(v) - from) out.push_back(from.without(v).with(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SafeFamily safe_family(const Graph& g, int k, GuardModel model, const SolveControl& control) {
  const int n = g.order();
  if (k < 1 || k > n) throw InvalidArgument("guard count must lie in 1..n");
  if (binomial_estimate(n, k) > control.max_configurations) {
    throw LimitExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") configurations exceed the solver limit");
  }

  SafeFamily family{k, model, dominating_sets_of_size(g, k)};
  const std::vector<VertexSet>& members = family.members;
  const ConfigIndex index(n, members);

  // Successor lists restricted to dominating configurations.
  std::vector<std::vector<int>> next(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((i & 1023) == 1023) check_deadline(control);
    for (VertexSet s : move_successors(g, members[i], model)) {
      if (s == members[i]) continue;
      const int j = index.find(s);
      if (j >= 0) next[i].push_back(j);
    }
  }

  const VertexSet all = g.vertices();
  std::vector<char> alive(members.size(), 1);
  std::size_t alive_count = members.size();
  if (control.sweep_sizes) control.sweep_sizes->push_back(alive_count);
  for (int sweep = 1;; ++sweep) {
    check_deadline(control);
    std::vector<char> kept = alive;
    bool changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!alive[i]) continue;
      VertexSet answered;
      for (int j : next[i]) {
        if (alive[j]) answered |= members[j];
      }
      const VertexSet unanswered = all - members[i] - answered;
      if (!unanswered.empty()) {
        kept[i] = 0;
        changed = true;
        --alive_count;
        if (control.removals) control.removals->push_back({members[i], sweep, unanswered.lowest()});
      }
    }
    alive.swap(kept);
    if (!changed) break;
    if (control.sweep_sizes) control.sweep_sizes->push_back(alive_count);
  }

  std::vector<VertexSet> survivors;
  survivors.reserve(alive_count);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (alive[i]) survivors.push_back(members[i]);
  }
  family.members = std::move(survivors);
  return family;
}

int eternal_value(const Graph& g, GuardModel model, const SolveControl& control) {
  int total = 0;
  for (VertexSet comp : g.components()) {
    int value = 0;
    solve_component_value(g.induced_subgraph(comp), model, control, value);
    total += value;
  }
  return total;
}

EternalResult eternal_domination_number(const Graph& g, const SolveControl& control) {
  return solve(g, GuardModel::one_guard, control);
}

EternalResult m_eternal_domination_number(const Graph& g, const SolveControl& control) {
  return solve(g, GuardModel::all_guards, control);
}

DefenseStrategy extract_strategy(const Graph& g, const SafeFamily& family) {
  if (family.empty()) throw InvalidArgument("extract_strategy: empty safe family");
  DefenseStrategy strategy(family.k, family.model);
  const VertexSet all = g.vertices();
  for (VertexSet config : family.members) {
    const std::vector<VertexSet> successors = move_successors(g, config, family.model);
    for (int attack : all - config) {
      std::optional<VertexSet> best;
      for (VertexSet s : successors) {
        if (!s.contains(attack) || !family.contains(s)) continue;
        if (!best || lex_less(s, *best)) best = s;
      }
      if (!best) {
        throw Error("extract_strategy: configuration " + to_string(config) + " cannot answer an attack at " +
                    std::to_string(attack) + "; the family is not closed");
      }
      strategy.set(config, attack, *best);
    }
  }
  return strategy;
}

std::optional<ClosureViolation> find_closure_violation(const Graph& g, const SafeFamily& family) {
  const VertexSet all = g.vertices();
  for (VertexSet config : family.members) {
    if (config.size() != family.k || !g.dominates(config)) return ClosureViolation{config, -1};
    for (int attack : all - config) {
      bool answered = false;
      if (family.model == GuardModel::one_guard) {
        for (int v : config & g.neighbors(attack)) {
          if (family.contains(config.without(v).with(attack))) {
            answered = true;
            break;
          }
        }
      } else {
        for (VertexSet other : family.members) {
          if (other.contains(attack) && transition_feasible(g, config, other)) {
            answered = true;
            break;
          }
        }
      }
      if (!answered) return ClosureViolation{config, attack};
    }
  }
  return std::nullopt;
}

std::vector<FactEdsViolation> verify_fact_eds(const Graph& g, const SafeFamily& family) {
  std::vector<FactEdsViolation> out;
  const VertexSet all = g.vertices();
  for (VertexSet config : family.members) {
    for (int v : config) {
      const VertexSet epn = private_neighbors(g, config, v).epn;
      if (!g.is_clique(epn.with(v))) {
        out.push_back({config, v, -1,
                       "D=" + to_string(config) + ": {" + std::to_string(v) + "} + epn " + to_string(epn) +
                           " is not a clique"});
      }
      for (int u : (all - config) & g.neighbors(v)) {
        if (!family.contains(config.without(v).with(u))) continue;
        if (!g.is_clique(epn.with(v).with(u))) {
          out.push_back({config, v, u,
                         "D=" + to_string(config) + ": " + std::to_string(v) + " defends " + std::to_string(u) +
                             " but {u,v} + epn " + to_string(epn) + " is not a clique"});
        }
      }
    }
  }
  return out;
}

std::optional<VertexSet> exists_epn_full_minimum_eds(const Graph& g, const SolveControl& control) {
  if (g.has_isolated_vertex()) throw InvalidArgument("exists_epn_full_minimum_eds: graph has an isolated vertex");
  const EternalResult result = eternal_domination_number(g, control);
  for (VertexSet config : result.family.members) {
    bool full = true;
    for (int v : config) {
      if (private_neighbors(g, config, v).epn.empty()) {
        full = false;
        break;
      }
    }
    if (full) return config;
  }
  return std::nullopt;
}

}  // namespace eternal
