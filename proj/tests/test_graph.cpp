#include <gtest/gtest.h>

#include <random>

#include "reflap/graph.hpp"
#include "support/oracles.hpp"

namespace reflap {
namespace {

TEST(BoundaryGraph, CanonicalizesEdges) {
  const auto g = new_boundary_graph(4, {{1, 0}, {2, 1}, {3, 2}}, {3, 0});
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.boundary(), (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(g.interior(), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BoundaryGraph, SingleIsolatedVertexIsValid) {
  const auto g = new_boundary_graph(1, {}, {});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.edges().empty());
  EXPECT_EQ(g.interior(), (std::vector<Vertex>{0}));
}

TEST(BoundaryGraph, RejectsBadInput) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvariantViolation;
  };
  EXPECT_EQ(code_of([] { new_boundary_graph(3, {{0, 0}}, {}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { new_boundary_graph(3, {{0, 3}}, {}); }), ErrorCode::InvalidVertex);
  EXPECT_EQ(code_of([] { new_boundary_graph(3, {{0, 1}, {1, 0}}, {}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { new_boundary_graph(3, {{0, 1}}, {5}); }), ErrorCode::InvalidVertex);
}

TEST(Doubling, PathFourIsSixCycle) {
  const auto p4 = path_graph(4, BoundarySpec::endpoints());
  const DoubledGraph dg = double_graph(p4);
  EXPECT_EQ(dg.graph.size(), 6u);
  EXPECT_EQ(dg.mirror, (std::vector<std::pair<Vertex, Vertex>>{{1, 4}, {2, 5}}));
  EXPECT_EQ(dg.graph.boundary(), p4.boundary());
  const auto walk = testing::cycle_walk(dg.graph);
  ASSERT_TRUE(walk.has_value());
  EXPECT_EQ(*walk, (std::vector<Vertex>{0, 1, 2, 3, 5, 4}));
}

TEST(Doubling, PathFiveIsEightCycle) {
  const DoubledGraph dg = double_graph(path_graph(5, BoundarySpec::endpoints()));
  ASSERT_EQ(dg.graph.size(), 8u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(dg.graph.degree(v), 2u);
  const auto walk = testing::cycle_walk(dg.graph);
  ASSERT_TRUE(walk.has_value());
  EXPECT_TRUE(testing::is_rotation_isomorphism(dg.graph, *walk));
  // The directly constructed cycle has the same degree sequence and edge count.
  const auto c8 = testing::direct_cycle(8);
  EXPECT_EQ(c8.edges().size(), dg.graph.edges().size());
}

TEST(Doubling, AllBoundaryAndEmptyInterior) {
  const auto g = new_boundary_graph(3, {{0, 1}, {1, 2}}, {0, 1, 2});
  const DoubledGraph dg = double_graph(g);
  EXPECT_EQ(dg.graph, g);
  EXPECT_TRUE(dg.mirror.empty());

  // n = 2 path: both vertices are boundary, nothing to copy.
  const auto p2 = path_graph(2, BoundarySpec::endpoints());
  EXPECT_EQ(double_graph(p2).graph, p2);
}

TEST(Doubling, DegreeBookkeepingAndMirrorStructure) {
  for (std::size_t i = 0; i < 60; ++i) {
    const auto g = testing::suite_graph(17, i, 10);
    const DoubledGraph dg = double_graph(g);
    ASSERT_EQ(dg.graph.size(), g.size() + g.interior().size());
    for (Vertex v = 0; v < g.size(); ++v) {
      const std::size_t expect = g.is_boundary(v) ? g.degree(v) + g.interior_degree(v) : g.degree(v);
      EXPECT_EQ(dg.graph.degree(v), expect) << "graph " << i << " vertex " << v;
    }
    for (auto [v, fv] : dg.mirror) {
      EXPECT_EQ(dg.original_of(fv), v);
      EXPECT_EQ(dg.mirror_of(v), fv);
      EXPECT_EQ(dg.graph.degree(fv), g.degree(v));
      for (Vertex w : g.boundary()) EXPECT_EQ(dg.graph.has_edge(v, w), dg.graph.has_edge(fv, w));
      // No edges between the interior and its copy.
      for (auto [u, fu] : dg.mirror) EXPECT_FALSE(dg.graph.has_edge(v, fu));
      for (auto [u, fu] : dg.mirror) EXPECT_EQ(g.has_edge(u, v), dg.graph.has_edge(fu, fv));
    }
  }
}

TEST(InducedSubgraph, InteriorOfPath) {
  const auto sub = induced_subgraph(path_graph(4, BoundarySpec::endpoints()), std::vector<Vertex>{1, 2});
  EXPECT_EQ(sub.graph.size(), 2u);
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(sub.graph.boundary().empty());
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 2}));
}

TEST(InducedSubgraph, IdentityAndRelabeling) {
  const auto c4 = cycle_graph(4, BoundarySpec::list({0, 3}));
  EXPECT_EQ(induced_subgraph(c4, std::vector<Vertex>{3, 2, 1, 0}).graph, c4);

  const auto sub = induced_subgraph(c4, std::vector<Vertex>{0, 1, 3});
  // Survivors: {0,1} and {3,0}; relabeled 3 -> 2 gives a path 1-0-2.
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(sub.graph.boundary(), (std::vector<Vertex>{0, 2}));

  EXPECT_THROW(induced_subgraph(c4, std::vector<Vertex>{4}), Error);
}

TEST(Generators, Shapes) {
  const auto p4 = generate(PathSpec{4}, BoundarySpec::endpoints());
  EXPECT_EQ(p4, new_boundary_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 3}));

  const auto c6 = generate(CycleSpec{6});
  EXPECT_EQ(c6.size(), 6u);
  EXPECT_EQ(c6.edges().size(), 6u);

  const auto grid = generate(GridSpec{4, 6}, BoundarySpec::columns());
  EXPECT_EQ(grid.size(), 24u);
  EXPECT_EQ(grid.edges().size(), 4u * 5u + 6u * 3u);
  EXPECT_EQ(grid.boundary().size(), 8u);
  EXPECT_TRUE(grid.is_boundary(6) && grid.is_boundary(11));

  const auto rows = generate(GridSpec{4, 6}, BoundarySpec::rows());
  EXPECT_EQ(rows.boundary().size(), 12u);

  const auto bb = generate(BarbellSpec{4, 2});
  EXPECT_EQ(bb.size(), 10u);
  EXPECT_EQ(bb.edges().size(), 6u + 6u + 3u);
  EXPECT_TRUE(bb.has_edge(3, 4) && bb.has_edge(4, 5) && bb.has_edge(5, 6));
  EXPECT_TRUE(is_connected(bb));
}

TEST(Generators, InvalidSpecs) {
  EXPECT_THROW(generate(CycleSpec{2}), Error);
  EXPECT_THROW(generate(PathSpec{0}), Error);
  EXPECT_THROW(generate(GridSpec{0, 3}), Error);
  EXPECT_THROW(generate(CycleSpec{5}, BoundarySpec::endpoints()), Error);
  EXPECT_THROW(generate(PathSpec{5}, BoundarySpec::columns()), Error);
  EXPECT_THROW(generate(PathSpec{3}, BoundarySpec::list({3})), Error);
}

TEST(Connectivity, Components) {
  const auto g = new_boundary_graph(4, {{0, 1}, {2, 3}}, {});
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(component_labels(g), (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_TRUE(is_connected(path_graph(5)));
}

}  // namespace
}  // namespace reflap
