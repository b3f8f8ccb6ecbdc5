#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

struct Universe {
  std::string description;
  std::vector<Graph> graphs;
};

// Non-isomorphic graphs (orders up to 8) or trees (up to 14), ascending order.
Universe all_graphs(int n_min, int n_max);
Universe all_trees(int n_min, int n_max);
Universe single_graph(const Graph& g, std::string description);

enum class ReportStatus { verified, counterexample, exploratory_none_found };
std::string_view to_string(ReportStatus status);

struct Violation {
  std::string graph6;
  std::string details;
};

struct TheoremReport {
  std::string theorem;
  std::string universe;
  long checked = 0;         // graphs examined
  long hypothesis_met = 0;  // graphs on which the statement had to hold
  std::vector<Violation> violations;
  double elapsed_seconds = 0;
  ReportStatus status = ReportStatus::verified;
  std::vector<std::string> notes;
};

enum class UniverseKind { graphs, trees, products };

struct RegistryEntry {
  std::string id;
  std::string statement;
  bool proven = true;  // false: exploratory, a hit is a discovery rather than a bug
  UniverseKind kind = UniverseKind::graphs;
  int default_n_max = 6;
};

const std::vector<RegistryEntry>& theorem_registry();
const std::vector<RegistryEntry>& question_registry();
const RegistryEntry* find_entry(std::string_view id);

struct HarnessOptions {
  int jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Throws InvalidArgument for an unknown id or an empty universe, LimitExceeded
// when the deadline passes.
TheoremReport check(std::string_view id, const Universe& universe, const HarnessOptions& options = {});
// Builds the registry's universe for `id` at orders up to n_max.
Universe universe_for(std::string_view id, int n_max);

struct SearchResult {
  TheoremReport report;
  std::optional<Graph> witness;
  std::string details;
};

// For product questions n_max bounds |V(G)|*|V(H)| and at most 12 is allowed.
SearchResult search_counterexample(std::string_view id, int n_max, const HarnessOptions& options = {});

struct ParamReport {
  std::string graph6;
  int order = 0;
  int size = 0;
  std::optional<int> gamma, gamma_m_inf, alpha, gamma_inf, theta, theta_c, gamma_c, matching;
  std::optional<VertexSet> gamma_witness, alpha_witness, gamma_c_witness;
  std::vector<VertexSet> theta_parts, theta_c_parts;
  std::vector<std::string> errors;  // solver failures; the row is kept
};

ParamReport compute_params(const Graph& g, const HarnessOptions& options = {});
// One row per graph, ordered by canonical form when every graph is small
// enough to canonize, otherwise in input order.
std::vector<ParamReport> parameter_sweep(const Universe& universe, const HarnessOptions& options = {});

std::string to_json(const TheoremReport& report, int indent = 2);
std::string to_text(const TheoremReport& report);
std::string to_json(const ParamReport& row, int indent = 2);
std::string to_json(const std::vector<ParamReport>& rows, int indent = 2);
std::string to_text(const std::vector<ParamReport>& rows);

}  // namespace eternal
