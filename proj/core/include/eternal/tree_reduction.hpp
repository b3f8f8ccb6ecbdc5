#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

// R1: a stem with >= 2 leaves and exactly one neighbour of degree >= 2 loses
//     all of its leaves.
// R2: a degree-2 stem x with exactly one leaf y; x and y are deleted.
// Either rule lowers the m-eternal domination number of a tree by exactly one.
enum class ReductionRule { r1, r2 };

struct ReductionStep {
  ReductionRule rule = ReductionRule::r2;
  int stem = -1;
  VertexSet removed;
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// Vertex labels always refer to the input tree.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  VertexSet terminal;  // vertices of the final star
  int value = 0;       // steps + (1 for K1/K2, 2 for K1,r with r >= 2)
};

// Name of the star on `terminal` vertices: "K1", "K2" or "K1,r".
std::string star_name(VertexSet terminal);
// One step per line, e.g. "R2 at stem 4: removed {4,5}", then the terminal.
std::string render_trace(const ReductionTrace& trace);

// Every R1/R2 application available in T[alive], ordered by stem.
std::vector<ReductionStep> applicable_reductions(const Graph& tree, VertexSet alive);
bool is_star(const Graph& tree, VertexSet alive);

struct TreeReduction {
  int value = 0;  // gamma_m-infinity(T)
  ReductionTrace trace;
};

// Roots T at the smallest vertex of maximum eccentricity and repeatedly
// reduces at the deepest stem (smallest index on ties) until a star remains.
// Throws InvalidArgument if the input is not a tree.
TreeReduction reduce_tree(const Graph& tree);

struct R2Reducibility {
  bool reducible = false;
  std::optional<ReductionTrace> trace;
};

// Can R2 alone reduce T (n >= 2) to K2 or K1,2? Explores every R2 site,
// memoizing on canonical forms of the reduced trees.
R2Reducibility r2_reduces_to_small_star(const Graph& tree);

enum class AttachmentSeed { k2, p3 };

// Starting from K2 or P3, each entry a attaches a new K2 {x, y} by the edge a-x.
// The new vertices are numbered n and n + 1 in order.
Graph build_by_k2_attachment(AttachmentSeed seed, std::span<const int> attachments);

// theta(T) = n - nu(T) for a tree.
int tree_clique_cover(const Graph& tree);

}  // namespace eternal
