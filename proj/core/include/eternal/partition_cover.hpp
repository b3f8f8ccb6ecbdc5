#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

// Partition of V into parts inducing connected subgraphs. A part weighs 1 if
// it is a clique and 1 + gamma_c of the part otherwise.
struct NeoColonization {
  std::vector<VertexSet> parts;  // ordered by smallest vertex
  std::vector<int> weights;
  int total = 0;
};

inline constexpr int kMaxThetaCOrder = 16;

// Throws InvalidArgument when the part is empty or induces a disconnected graph.
int part_weight(const Graph& g, VertexSet part);

// Builds a colonization from parts, computing weights and total.
NeoColonization make_colonization(const Graph& g, std::vector<VertexSet> parts);

// nullopt if valid, else a description of the first broken invariant.
std::optional<std::string> validate_colonization(const Graph& g, const NeoColonization& c);

// theta_c(G) by subset dynamic programming; n <= 16 (LimitExceeded beyond).
NeoColonization theta_c(const Graph& g);

struct StarColonization {
  NeoColonization colonization;
  int cover_size = 0;  // tau
  int unmatched = 0;   // |M_u|, vertices outside the cover-grown matching
};

// Star partition of a bipartite graph without isolated vertices: each edge of
// a matching grown from the lexicographically smallest minimum cover forms a
// part, and each unmatched vertex joins the part of its smallest neighbour.
// Throws InvalidArgument on a non-bipartite graph or an isolated vertex.
StarColonization bipartite_star_colonization(const Graph& g);

}  // namespace eternal
