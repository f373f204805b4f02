#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/perturbation.hpp"
#include "oracles.hpp"

using namespace fiedler;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

}  // namespace

TEST(BuildGraph, SmallestPath) {
  const std::vector<Edge> e{{0, 1, 1.0}, {1, 2, 1.0}};
  const Graph g = build_graph(3, e);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.hop_degree(1), 2u);
}

TEST(BuildGraph, CanonicalizesEdgeOrder) {
  const std::vector<Edge> e{{2, 1, 0.5}, {1, 0, 2.0}};
  const Graph g = build_graph(3, e);
  EXPECT_EQ(edges_of(g), (std::vector<Edge>{{0, 1, 2.0}, {1, 2, 0.5}}));
  EXPECT_DOUBLE_EQ(g.degree(1), 2.5);
  EXPECT_DOUBLE_EQ(g.total_weight(), 2.5);
}

TEST(BuildGraph, RejectsDuplicateUndirectedEdge) {
  const std::vector<Edge> e{{0, 1, 1.0}, {1, 0, 1.0}};
  EXPECT_THROW(build_graph(2, e), GraphError);
}

TEST(BuildGraph, RejectsMalformedEdges) {
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 0, 1.0}}), GraphError);
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 2, 1.0}}), GraphError);
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 1, 0.0}}), GraphError);
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 1, -1.0}}), GraphError);
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 1, std::nan("")}}), GraphError);
}

TEST(BuildGraph, CompleteGraphDegrees) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) e.push_back({i, j, 1.0});
  const Graph g = build_graph(4, e);
  for (Vertex v = 0; v < 4; ++v) EXPECT_DOUBLE_EQ(g.degree(v), 3.0);
}

TEST(Laplacian, PathP3) {
  const SymmetricMatrix L = laplacian(path_graph(3));
  const double expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(L(i, j), expected[i][j]);
}

TEST(Laplacian, PendantAtPathEnd) {
  const double x = 0.37;
  const Graph g = attach_pendant(path_graph(5), 4, x);
  const SymmetricMatrix L = laplacian(g);
  EXPECT_DOUBLE_EQ(L(4, 3), -1.0);
  EXPECT_DOUBLE_EQ(L(4, 4), 1.0 + x);
  EXPECT_DOUBLE_EQ(L(4, 5), -x);
  EXPECT_DOUBLE_EQ(L(5, 3), 0.0);
  EXPECT_DOUBLE_EQ(L(5, 4), -x);
  EXPECT_DOUBLE_EQ(L(5, 5), x);
}

TEST(Laplacian, CompleteK4) {
  const SymmetricMatrix L = laplacian(complete_graph(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(L(i, j), i == j ? 3.0 : -1.0);
}

TEST(Laplacian, MatchesDenseOracleWithWeights) {
  const std::vector<Edge> e{{0, 1, 0.5}, {1, 2, 2.0}, {0, 3, 1.5}, {2, 3, 0.25}};
  const Graph g = build_graph(4, e);
  const auto dense = oracle::dense_laplacian(g);
  const SymmetricMatrix L = laplacian(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(L(i, j), dense[i][j]);
}

TEST(Connectivity, Basic) {
  EXPECT_TRUE(is_connected(path_graph(3)));
  EXPECT_FALSE(is_connected(build_graph(4, std::vector<Edge>{{0, 1, 1.0}, {2, 3, 1.0}})));
}

TEST(Connectivity, CompleteGraphWithIsolatedVertex) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 19; ++i)
    for (Vertex j = i + 1; j < 19; ++j) e.push_back({i, j, 1.0});
  EXPECT_FALSE(is_connected(build_graph(20, e)));
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(generate(GraphKind::path, 3).edge_count(), 2u);
  EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
  EXPECT_EQ(complete_graph(7).edge_count(), 21u);
  const Graph s = star_graph(6);
  EXPECT_EQ(s.vertex_count(), 6u);
  EXPECT_EQ(s.hop_degree(0), 5u);
}

TEST(Generators, GnmIsConnectedWithExactEdgeCount) {
  const Graph g = generate(GraphKind::gnm, 20, 45, 7);
  EXPECT_EQ(g.vertex_count(), 20u);
  EXPECT_EQ(g.edge_count(), 45u);
  EXPECT_EQ(oracle::components(g), 1u);
}

TEST(Generators, GnmSeedBehaviour) {
  EXPECT_EQ(edges_of(gnm_graph(20, 45, 11)), edges_of(gnm_graph(20, 45, 11)));
  EXPECT_NE(edges_of(gnm_graph(20, 45, 11)), edges_of(gnm_graph(20, 45, 12)));
}

TEST(Generators, GnmRejectsInfeasible) {
  EXPECT_THROW(gnm_graph(20, 18, 1), DomainError);
  EXPECT_THROW(gnm_graph(5, 11, 1), DomainError);
  EXPECT_THROW(generate(GraphKind::gnm, 20, std::nullopt, 1), DomainError);
  EXPECT_THROW(generate(GraphKind::gnm, 20, 45, std::nullopt), DomainError);
}

TEST(Generators, RandomTreeIsSpanningTree) {
  const Graph t = generate(GraphKind::random_tree, 50, std::nullopt, 1);
  EXPECT_EQ(t.edge_count(), 49u);
  EXPECT_EQ(oracle::components(t), 1u);
  const auto d = bfs_distances(t, 0);
  for (auto x : d) EXPECT_NE(x, std::numeric_limits<std::size_t>::max());
}

TEST(Generators, GraphKindNames) {
  for (auto k : {GraphKind::path, GraphKind::cycle, GraphKind::complete, GraphKind::star, GraphKind::gnm,
                 GraphKind::random_tree}) {
    EXPECT_EQ(parse_graph_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_graph_kind("hypercube"));
}

TEST(Relabel, PreservesStructure) {
  const Graph g = path_graph(4);
  const std::vector<Vertex> perm{3, 1, 0, 2};
  const Graph h = relabel(g, perm);
  std::set<std::pair<Vertex, Vertex>> got;
  for (const Edge& e : h.edges()) got.insert({e.u, e.v});
  EXPECT_EQ(got, (std::set<std::pair<Vertex, Vertex>>{{1, 3}, {0, 1}, {0, 2}}));
}

TEST(EdgeList, RoundTrip) {
  const std::vector<Edge> e{{0, 1, 0.1}, {1, 2, 1.0 / 3.0}, {0, 3, 2.0}};
  const Graph g = build_graph(4, e);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph h = read_edge_list(buf);
  EXPECT_EQ(edges_of(g), edges_of(h));
}

TEST(EdgeList, CommentsAndDefaultWeight) {
  std::istringstream in("# triangle\n3 3\n0 1\n1 2 2.5  # heavy\n\n2 0\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_DOUBLE_EQ(g.degree(2), 3.5);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1 -2\n1 2\n"), 2u);
  EXPECT_EQ(line_of("3 2\n0 1 1 7\n1 2\n"), 2u);
  EXPECT_EQ(line_of("three 2\n"), 1u);
  std::istringstream missing("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(missing), InputError);
  std::istringstream extra("3 1\n0 1\n1 2\n");
  EXPECT_THROW(read_edge_list(extra), InputError);
}
