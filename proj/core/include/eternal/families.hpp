#pragma once

#include <array>
#include <string_view>

#include "eternal/graph.hpp"

namespace eternal {

// G □ H: vertex (a, x) is numbered a * |H| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

// G ∘ K1: vertex v keeps its number and gains the pendant leaf n + v.
Graph corona(const Graph& g);

Graph empty_graph(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
// Parts {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(int m, int n);
// K_{1,r} with centre 0.
Graph star(int r);
// K_{m,n} minus the matching {i, m+i : i < removed}.
Graph kmn_minus_matching(int m, int n, int removed);
// C6 with vertex i replaced by a clique of sizes[i] vertices, consecutive
// cliques completely joined.
Graph blown_up_c6(const std::array<int, 6>& sizes);
// P_{3k-4} with one new leaf attached to each of its stems.
Graph stems_with_leaves_tree(int k);

// Family micro-grammar used by the CLI and tests:
//   path:N cycle:N complete:N empty:N star:R kmn:M,N kmn-m:M,N,L
//   blowc6:A,B,C,D,E,F stems:K corona:<spec>
// and products "<spec>*<spec>" (left-associative).
Graph named_family(std::string_view spec);

}  // namespace eternal
