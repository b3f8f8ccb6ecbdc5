#include <set>

#include <gtest/gtest.h>

#include "eternal/canonical.hpp"
#include "eternal/error.hpp"
#include "eternal/eternal_engine.hpp"
#include "eternal/families.hpp"
#include "eternal/graph6.hpp"
#include "eternal/params.hpp"
#include "eternal/partition_cover.hpp"
#include "eternal/tree_reduction.hpp"
#include "oracle.hpp"

namespace eternal {
namespace {

Graph spider(int legs, int leg_length) {
  std::vector<Edge> edges;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < leg_length; ++i, ++next) {
      edges.push_back({prev, next});
      prev = next;
    }
  }
  return Graph::from_edge_list(next, edges);
}

std::vector<Graph> trees_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& ts = enumerate_trees(n);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

// Replays a trace and checks every step was legal when taken.
void replay(const Graph& tree, const ReductionTrace& trace) {
  VertexSet alive = tree.vertices();
  for (const ReductionStep& step : trace.steps) {
    const auto options = applicable_reductions(tree, alive);
    ASSERT_NE(std::find(options.begin(), options.end(), step), options.end())
        << to_graph6(tree) << " stem " << step.stem;
    alive -= step.removed;
    ASSERT_TRUE(tree.is_connected(alive));
  }
  EXPECT_EQ(alive, trace.terminal);
  EXPECT_TRUE(is_star(tree, alive));
}

TEST(StarTest, Names) {
  EXPECT_EQ(star_name(VertexSet{3}), "K1");
  EXPECT_EQ(star_name(VertexSet{3, 4}), "K2");
  EXPECT_EQ(star_name(VertexSet{0, 1, 2}), "K1,2");
  EXPECT_EQ(star_name(VertexSet{0, 1, 2, 3, 4}), "K1,4");
  EXPECT_TRUE(is_star(star(4), star(4).vertices()));
  EXPECT_FALSE(is_star(path(4), path(4).vertices()));
  EXPECT_TRUE(is_star(path(4), VertexSet{0, 1, 2}));
}

TEST(ReduceTreeTest, Examples) {
  const TreeReduction k14 = reduce_tree(star(4));
  EXPECT_EQ(k14.value, 2);
  EXPECT_TRUE(k14.trace.steps.empty());
  EXPECT_EQ(k14.trace.terminal, star(4).vertices());

  const TreeReduction p6 = reduce_tree(path(6));
  EXPECT_EQ(p6.value, 3);
  ASSERT_EQ(p6.trace.steps.size(), 2u);
  EXPECT_EQ(p6.trace.steps[0].rule, ReductionRule::r2);
  EXPECT_EQ(p6.trace.terminal.size(), 2);
  replay(path(6), p6.trace);

  const Graph sp = spider(3, 2);
  ASSERT_EQ(sp.order(), 7);
  const TreeReduction s = reduce_tree(sp);
  EXPECT_EQ(s.value, 4);
  ASSERT_EQ(s.trace.steps.size(), 2u);
  for (const ReductionStep& st : s.trace.steps) EXPECT_EQ(st.rule, ReductionRule::r2);
  EXPECT_EQ(star_name(s.trace.terminal), "K1,2");
  replay(sp, s.trace);

  EXPECT_EQ(reduce_tree(complete(1)).value, 1);
  EXPECT_EQ(reduce_tree(complete(2)).value, 1);
  EXPECT_THROW(reduce_tree(cycle(4)), InvalidArgument);
  EXPECT_THROW(reduce_tree(empty_graph(2)), InvalidArgument);
}

TEST(ReduceTreeTest, R1Applies) {
  // Double star: R1 strips one side's leaves.
  const Graph ds = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
  const TreeReduction r = reduce_tree(ds);
  EXPECT_EQ(r.value, 3);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].rule, ReductionRule::r1);
  replay(ds, r.trace);
}

TEST(RenderTraceTest, Format) {
  const TreeReduction p4 = reduce_tree(path(4));
  const std::string text = render_trace(p4.trace);
  EXPECT_NE(text.find("R2 at stem "), std::string::npos) << text;
  EXPECT_NE(text.find("terminal K2 on {"), std::string::npos) << text;
}

TEST(ReduceTreeProperty, AgreesWithEngineAndThetaC) {
  for (const Graph& t : trees_up_to(11)) {
    SCOPED_TRACE(to_graph6(t));
    const TreeReduction r = reduce_tree(t);
    replay(t, r.trace);
    EXPECT_EQ(r.trace.value, r.value);
    EXPECT_EQ(r.value, theta_c(t).total);
    if (t.order() <= 10) {
      EXPECT_EQ(r.value, eternal_value(t, GuardModel::all_guards));
    }
  }
}

TEST(ReduceTreeProperty, EveryReductionLowersByOne) {
  for (const Graph& t : trees_up_to(10)) {
    const int value = eternal_value(t, GuardModel::all_guards);
    for (const ReductionStep& step : applicable_reductions(t, t.vertices())) {
      const Graph rest = t.induced_subgraph(t.vertices() - step.removed);
      ASSERT_TRUE(rest.is_tree());
      EXPECT_EQ(eternal_value(rest, GuardModel::all_guards), value - 1) << to_graph6(t) << " stem " << step.stem;
    }
  }
}

TEST(R2Test, Examples) {
  const R2Reducibility p6 = r2_reduces_to_small_star(path(6));
  EXPECT_TRUE(p6.reducible);
  ASSERT_TRUE(p6.trace);
  EXPECT_EQ(star_name(p6.trace->terminal), "K2");
  EXPECT_TRUE(r2_reduces_to_small_star(path(5)).reducible);
  EXPECT_TRUE(r2_reduces_to_small_star(spider(3, 2)).reducible);
  const R2Reducibility k13 = r2_reduces_to_small_star(star(3));
  EXPECT_FALSE(k13.reducible);
  EXPECT_FALSE(k13.trace);
  EXPECT_TRUE(r2_reduces_to_small_star(complete(2)).reducible);
  EXPECT_THROW(r2_reduces_to_small_star(complete(1)), InvalidArgument);
  EXPECT_THROW(r2_reduces_to_small_star(cycle(5)), InvalidArgument);
}

TEST(R2Property, EquivalentToThetaEquality) {
  for (const Graph& t : trees_up_to(12)) {
    if (t.order() < 2) continue;
    SCOPED_TRACE(to_graph6(t));
    const R2Reducibility r = r2_reduces_to_small_star(t);
    const int theta = tree_clique_cover(t);
    EXPECT_EQ(theta, clique_cover_number(t).value);
    EXPECT_EQ(r.reducible, reduce_tree(t).value == theta);
    if (r.reducible) {
      ASSERT_TRUE(r.trace);
      replay(t, *r.trace);
      for (const ReductionStep& st : r.trace->steps) EXPECT_EQ(st.rule, ReductionRule::r2);
      EXPECT_LE(r.trace->terminal.size(), 3);
    }
  }
}

TEST(AttachmentTest, Examples) {
  const std::vector<int> none;
  EXPECT_TRUE(is_isomorphic(build_by_k2_attachment(AttachmentSeed::k2, none), complete(2)));
  EXPECT_TRUE(is_isomorphic(build_by_k2_attachment(AttachmentSeed::p3, none), path(3)));
  const std::vector<int> ends = {1, 3};
  const Graph p6 = build_by_k2_attachment(AttachmentSeed::k2, ends);
  EXPECT_TRUE(is_isomorphic(p6, path(6)));
  EXPECT_TRUE(p6.adjacent(1, 2));
  EXPECT_TRUE(p6.adjacent(2, 3));
  const std::vector<int> centre = {1, 1};
  EXPECT_TRUE(is_isomorphic(build_by_k2_attachment(AttachmentSeed::p3, centre), Graph::from_edge_list(7, {{6, 0}, {6, 1}, {6, 2}, {2, 3}, {6, 4}, {4, 5}})));
  const std::vector<int> bad = {2};
  EXPECT_THROW(build_by_k2_attachment(AttachmentSeed::k2, bad), InvalidArgument);
}

void collect(AttachmentSeed seed, std::vector<int>& seq, int n, int n_max, std::set<std::string>& out) {
  const Graph t = build_by_k2_attachment(seed, seq);
  out.insert(tree_canonical_form(t));
  if (n + 2 > n_max) return;
  for (int a = 0; a < n; ++a) {
    seq.push_back(a);
    collect(seed, seq, n + 2, n_max, out);
    seq.pop_back();
  }
}

TEST(AttachmentProperty, BuildsExactlyTheThetaEqualityTrees) {
  constexpr int kMax = 12;
  std::set<std::string> built;
  std::vector<int> seq;
  collect(AttachmentSeed::k2, seq, 2, kMax, built);
  collect(AttachmentSeed::p3, seq, 3, kMax, built);
  std::set<std::string> equal;
  for (const Graph& t : trees_up_to(kMax)) {
    if (t.order() >= 2 && reduce_tree(t).value == tree_clique_cover(t)) equal.insert(tree_canonical_form(t));
  }
  EXPECT_EQ(built, equal);
  EXPECT_GT(built.size(), 50u);
}

TEST(TreeCliqueCoverTest, Examples) {
  EXPECT_EQ(tree_clique_cover(path(6)), 3);
  EXPECT_EQ(tree_clique_cover(star(4)), 4);
  EXPECT_EQ(tree_clique_cover(complete(1)), 1);
  EXPECT_THROW(tree_clique_cover(cycle(3)), InvalidArgument);
}

}  // namespace
}  // namespace eternal
