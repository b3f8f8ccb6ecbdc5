#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

inline constexpr int kMaxCanonicalOrder = 11;
inline constexpr int kMaxEnumeratedOrder = 8;
inline constexpr int kMaxEnumeratedTreeOrder = 14;

// Isomorphism-invariant code of a graph: the lexicographically largest
// upper-triangle adjacency string (graph6 bit order) over all labellings that
// list vertices by colour-refinement class. Exhaustive within classes, so only
// available for n <= 11.
struct CanonicalForm {
  int order = 0;
  std::uint64_t code = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);
Graph graph_from_canonical_form(const CanonicalForm& form);
bool is_isomorphic(const Graph& g, const Graph& h);

// Rooted-tree encoding at the centre (min over both centres when bicentral).
std::string tree_canonical_form(const Graph& tree);

// One representative per isomorphism class of graphs of order n (1 <= n <= 8),
// canonically labelled and sorted by canonical form. Results are cached.
const std::vector<Graph>& enumerate_nonisomorphic(int n);

// One representative per isomorphism class of trees of order n (1 <= n <= 14),
// sorted by tree_canonical_form, vertices numbered in preorder from the centre.
const std::vector<Graph>& enumerate_trees(int n);

}  // namespace eternal
