#include <gtest/gtest.h>

#include <random>

#include "testkit.hpp"

using namespace dptree;

namespace {

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Digraph, FromArcsRejectsBadInput) {
  expect_code(ErrorCode::InvalidParameter, [] { Digraph::from_arcs(3, {{0, 0}}); });
  expect_code(ErrorCode::InvalidParameter, [] { Digraph::from_arcs(3, {{0, 1}, {0, 1}}); });
  expect_code(ErrorCode::InvalidVertex, [] { Digraph::from_arcs(3, {{0, 3}}); });
  expect_code(ErrorCode::InvalidVertex, [] { Digraph::from_arcs(3, {{-1, 2}}); });
}

TEST(Digraph, AdjacencySortedAndArcsLexicographic) {
  Digraph d = Digraph::from_arcs(4, {{2, 0}, {0, 3}, {0, 1}, {3, 0}});
  ASSERT_EQ(d.arc_count(), 4u);
  auto out0 = d.out_neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(out0.begin(), out0.end()), (std::vector<VertexId>{1, 3}));
  auto in0 = d.in_neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(in0.begin(), in0.end()), (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {0, 3}, {2, 0}, {3, 0}}));
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
}

TEST(Digraph, StrongExamples) {
  EXPECT_TRUE(is_strong(directed_cycle(3)));
  EXPECT_FALSE(is_strong(directed_path(3)));
  EXPECT_TRUE(is_strong(bidirected_path(4)));
  EXPECT_TRUE(is_strong(Digraph(0)));
  EXPECT_TRUE(is_strong(Digraph(1)));
  EXPECT_FALSE(is_strong(Digraph(2)));
}

TEST(Digraph, ConnectivityExamples) {
  EXPECT_EQ(vertex_connectivity(complete_symmetric(5)), 4);
  EXPECT_EQ(vertex_connectivity(directed_cycle(5)), 1);
  EXPECT_EQ(vertex_connectivity(bidirected_path(4)), 1);
  EXPECT_TRUE(is_l_strong(complete_symmetric(5), 4));
  EXPECT_FALSE(is_l_strong(complete_symmetric(5), 5));  // needs l + 1 vertices
  EXPECT_FALSE(is_l_strong(directed_cycle(4), 2));
  EXPECT_EQ(min_semi_degree(complete_symmetric(6)), 5);
  EXPECT_EQ(min_semi_degree(bidirected_path(4)), 1);
  EXPECT_EQ(min_semi_degree(directed_path(3)), 0);
}

TEST(Digraph, ConnectivityMatchesExhaustiveSeparators) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    double p = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
    Digraph d = testkit::random_digraph(rng, n, p);
    if (!is_strong(d)) continue;
    int kappa = testkit::brute_force_connectivity(d);
    ASSERT_EQ(vertex_connectivity(d), kappa) << "round " << round;
    EXPECT_TRUE(is_l_strong(d, kappa));
    EXPECT_FALSE(is_l_strong(d, kappa + 1));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Digraph, RemoveVerticesKeepsInducedArcs) {
  Digraph k = complete_symmetric(5);
  auto sub = remove_vertices(k, VertexSet{1, 3});
  EXPECT_EQ(sub.graph.vertex_count(), 3);
  EXPECT_EQ(sub.graph.arc_count(), 6u);
  EXPECT_EQ(sub.original_of, (std::vector<VertexId>{0, 2, 4}));
  EXPECT_EQ(sub.new_of, (std::vector<VertexId>{0, -1, 1, -1, 2}));
  EXPECT_THROW(remove_vertices(k, VertexSet{7}), Error);
}

TEST(Digraph, Generators) {
  EXPECT_EQ(complete_symmetric(6).arc_count(), 30u);
  EXPECT_EQ(bidirected_path(5).arc_count(), 8u);
  EXPECT_EQ(directed_path(5).arc_count(), 4u);
  Digraph c = directed_cycle(5);
  EXPECT_EQ(c.arc_count(), 5u);
  EXPECT_TRUE(c.has_arc(4, 0));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph a = random_strong(7, 0.2, seed);
    EXPECT_TRUE(is_strong(a));
    EXPECT_EQ(a, random_strong(7, 0.2, seed));
  }
  EXPECT_NE(random_strong(9, 0.4, 1), random_strong(9, 0.4, 2));
}

TEST(Digraph, VertexSetNormalises) {
  VertexSet s(std::vector<VertexId>{4, 1, 4, 2});
  EXPECT_EQ(s.members(), (std::vector<VertexId>{1, 2, 4}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}
