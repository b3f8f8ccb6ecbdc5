#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

// one_guard: a single guard moves to the attacked vertex (eternal domination).
// all_guards: every guard may move to a neighbour or stay, one of them onto
// the attacked vertex (m-eternal domination).
enum class GuardModel { one_guard, all_guards };

std::string_view to_string(GuardModel model);
// Accepts "one-guard" / "all-guards" (and "eds" / "m-eds").
GuardModel parse_guard_model(std::string_view text);

// Guard configurations of size k from which the defender wins forever: the
// greatest family of dominating k-sets closed under the model's defense rule.
// Members are sorted by mask.
struct SafeFamily {
  int k = 0;
  GuardModel model = GuardModel::one_guard;
  std::vector<VertexSet> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(VertexSet config) const;
};

// A configuration dropped by the fixed point and an attack that it could not
// answer within the family that survived the previous sweep.
struct Removal {
  VertexSet configuration;
  int sweep = 0;
  int attack = -1;
};

struct SolveControl {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Refuse (LimitExceeded) when C(n, k) exceeds this.
  double max_configurations = 5e6;
  // Optional diagnostics.
  std::vector<Removal>* removals = nullptr;
  std::vector<std::size_t>* sweep_sizes = nullptr;
};

// True iff guards on `from` can move (or stay) so as to occupy exactly `to`:
// a perfect matching from `from` into `to` along closed neighbourhoods.
// Throws InvalidArgument on a size mismatch.
bool transition_feasible(const Graph& g, VertexSet from, VertexSet to);

// Every configuration reachable from `from` in one defender move, ascending
// by mask. For all_guards this includes `from` itself.
std::vector<VertexSet> move_successors(const Graph& g, VertexSet from, GuardModel model);

SafeFamily safe_family(const Graph& g, int k, GuardModel model, const SolveControl& control = {});

struct EternalResult {
  int value = 0;
  SafeFamily family;
};

// gamma-infinity(G): smallest k with a nonempty one-guard safe family.
EternalResult eternal_domination_number(const Graph& g, const SolveControl& control = {});
// gamma_m-infinity(G): smallest k with a nonempty all-guards safe family.
EternalResult m_eternal_domination_number(const Graph& g, const SolveControl& control = {});
// Value only, summed over components without building the whole-graph family.
int eternal_value(const Graph& g, GuardModel model, const SolveControl& control = {});

// Response table of a safe family: for each member and unoccupied vertex, the
// lexicographically smallest member that answers the attack.
class DefenseStrategy {
 public:
  DefenseStrategy(int k, GuardModel model) : k_(k), model_(model) {}

  int k() const { return k_; }
  GuardModel model() const { return model_; }
  std::size_t size() const { return table_.size(); }
  // nullopt when the pair lies outside the strategy's domain.
  std::optional<VertexSet> respond(VertexSet config, int attack) const;
  const std::map<std::pair<VertexSet, int>, VertexSet>& table() const { return table_; }
  void set(VertexSet config, int attack, VertexSet reply) { table_[{config, attack}] = reply; }

 private:
  int k_;
  GuardModel model_;
  std::map<std::pair<VertexSet, int>, VertexSet> table_;
};

// Throws InvalidArgument on an empty family, Error if the family is not closed.
DefenseStrategy extract_strategy(const Graph& g, const SafeFamily& family);

// A closure failure found by direct re-check of a family.
struct ClosureViolation {
  VertexSet configuration;
  int attack = -1;
};
std::optional<ClosureViolation> find_closure_violation(const Graph& g, const SafeFamily& family);

struct FactEdsViolation {
  VertexSet configuration;
  int guard = -1;
  int defended = -1;  // -1: {v} + epn(v, D) is not a clique
  std::string details;
};

// Checks, for every member D of a one-guard safe family, that {v} + epn(v, D)
// is a clique and that {u, v} + epn(v, D) is one whenever v can answer an
// attack at u inside the family.
std::vector<FactEdsViolation> verify_fact_eds(const Graph& g, const SafeFamily& family);

// A minimum eternal dominating set whose members all have an external private
// neighbour, if one exists. Throws InvalidArgument on an isolated vertex.
std::optional<VertexSet> exists_epn_full_minimum_eds(const Graph& g, const SolveControl& control = {});

}  // namespace eternal
