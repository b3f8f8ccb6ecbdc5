#pragma once

#include <optional>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

// An optimum value together with the lexicographically smallest optimal set.
struct SetOptimum {
  int value = 0;
  VertexSet witness;
};

struct CliquePartition {
  int value = 0;
  // Parts ordered by smallest vertex.
  std::vector<VertexSet> parts;
};

struct CoverAndMatching {
  int cover_size = 0;     // tau
  int matching_size = 0;  // nu
  std::vector<Edge> matching;
  VertexSet cover;
};

struct PrivateNeighbors {
  VertexSet pn;   // N[v] - N[D - v]
  VertexSet epn;  // pn - v
};

struct KDominationCoverage {
  bool every_vertex = false;
  VertexSet uncovered;
};

// gamma(G). Computed per component; the witness is lexicographically smallest.
SetOptimum domination_number(const Graph& g);
// alpha(G).
SetOptimum independence_number(const Graph& g);
// theta(G) as the chromatic number of the complement. The partition is the
// first one in restricted-growth order (vertex 0 in part 0, ...).
CliquePartition clique_cover_number(const Graph& g);
// gamma_c(G); throws InvalidArgument when G is disconnected or empty.
SetOptimum connected_domination_number(const Graph& g);
// tau(G) = n - alpha(G) with the lexicographically smallest minimum cover and a
// maximum matching. For bipartite G the matching pairs every cover vertex with
// a non-cover neighbour (Konig).
CoverAndMatching vertex_cover_and_matching(const Graph& g);
int maximum_matching_size(const Graph& g);

// Throws InvalidArgument if v is not in d.
PrivateNeighbors private_neighbors(const Graph& g, VertexSet d, int v);

// Is every vertex in some dominating set of size k?
KDominationCoverage every_vertex_in_k_dominating_set(const Graph& g, int k);

// Lexicographically smallest dominating set of exactly k vertices.
std::optional<VertexSet> first_dominating_set(const Graph& g, int k);
// All dominating k-sets, ascending by mask.
std::vector<VertexSet> dominating_sets_of_size(const Graph& g, int k);
// All independent sets of size alpha(G), ascending by mask.
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

}  // namespace eternal
