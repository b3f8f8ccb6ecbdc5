#pragma once

#include <optional>
#include <vector>

#include "eternal/graph.hpp"

namespace eternal {

// G is K_{|A|,|B|} minus `deleted`, with 2 <= |A| <= |B|. When |A| == |B| the
// matching may be perfect; otherwise it leaves at least one vertex of A full.
struct ClassCCertificate {
  VertexSet a;
  VertexSet b;
  std::vector<Edge> deleted;  // (a-side, b-side), ordered by the a-side vertex
  VertexSet depleted;         // endpoints of `deleted`; every other vertex is full
};

std::optional<ClassCCertificate> class_c_membership(const Graph& g);
// Rebuilds the graph a certificate describes, on g's vertex labels.
Graph graph_from_certificate(int order, const ClassCCertificate& cert);

// Both sides of an equivalence, kept apart so a failure says which side broke.
struct IffCheck {
  bool lhs = false;
  bool rhs = false;
  bool holds() const { return lhs == rhs; }
  friend bool operator==(const IffCheck&, const IffCheck&) = default;
};

// lhs: gamma = gamma_m-inf = 2. rhs: membership in class C.
IffCheck bipartite_two_characterization(const Graph& g);
// lhs as above. rhs: G is C5 or in class C.
IffCheck triangle_free_two_characterization(const Graph& g);

// Every vertex lies in a dominating 2-set. Throws on complete graphs.
bool prop2_condition(const Graph& g);
// Some closed neighbourhood contains every maximum independent set. Needs alpha = 3.
bool prop3_condition(const Graph& g);

// gamma = n/2. Throws on isolated vertices.
bool gamma_half(const Graph& g);
// Every component is C4 or a corona H o K1.
bool components_are_c4_or_corona(const Graph& g);
// Connected input only; K2 counts as the corona of K1.
bool is_corona(const Graph& g);

// lhs: gamma = gamma-inf. rhs: gamma = n/2. Bipartite, no isolated vertices.
IffCheck bipartite_gamma_eq_eternal(const Graph& g);

}  // namespace eternal
