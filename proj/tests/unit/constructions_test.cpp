#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "upse/checker.hpp"
#include "upse/constructions.hpp"
#include "upse/error.hpp"

using namespace upse;
namespace ut = upse::testing;

namespace {

Point P(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no upse::Error thrown";
  return ErrorKind::InvalidArgument;
}

std::vector<std::string> labels_of(const Digraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t v : idx) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::multiset<std::int64_t>> group_sizes(const PartitionInstance& inst, const PartitionSolution& sol) {
  std::vector<std::multiset<std::int64_t>> out;
  for (const auto& t : sol.sets) out.push_back({inst.A[t[0]], inst.A[t[1]], inst.A[t[2]]});
  return out;
}

}  // namespace

TEST(BinucciTree, Shape) {
  const Digraph t5 = gen_binucci_tree(5);
  EXPECT_EQ(t5.vertex_count(), 16u);
  EXPECT_EQ(t5.arc_count(), 15u);
  EXPECT_EQ(longest_directed_path_length(t5), 4u);
  EXPECT_TRUE(is_tree(t5));
  EXPECT_FALSE(is_switch_tree(t5));

  const Digraph t7 = gen_binucci_tree(7);
  EXPECT_EQ(t7.vertex_count(), 22u);
  EXPECT_EQ(labels_of(t7, sources_and_sinks(t7).sources), (std::vector<std::string>{"u7", "v1", "w1"}));
  EXPECT_EQ(labels_of(t7, sources_and_sinks(t7).sinks), (std::vector<std::string>{"u1", "v7", "w7"}));
  EXPECT_EQ(longest_directed_path_length(t7), 6u);
}

TEST(BinucciTree, BadN) {
  for (std::size_t n : {0u, 3u, 4u, 6u}) {
    EXPECT_EQ(kind_of([&] { (void)gen_binucci_tree(n); }), ErrorKind::BadN);
    EXPECT_EQ(kind_of([&] { (void)gen_binucci_pointset(n); }), ErrorKind::BadN);
  }
}

TEST(BinucciPointSet, ContractForOddN) {
  for (std::size_t n = 5; n <= 15; n += 2) {
    const PointSet s = gen_binucci_pointset(n);
    ASSERT_EQ(s.size(), 3 * n + 1);
    EXPECT_TRUE(is_convex_position(s));
    EXPECT_TRUE(is_general_position(s));
    const auto sides = classify_sides(s);
    const std::size_t h = (3 * n - 1) / 2;
    ASSERT_EQ(sides.left.size(), h);
    ASSERT_EQ(sides.right.size(), h);
    // y(b) < y(r1) < y(l1) < y(r2) < ... < y(lh) < y(t)
    std::vector<std::size_t> chain{sides.b};
    for (std::size_t i = 0; i < h; ++i) {
      chain.push_back(sides.right[i]);
      chain.push_back(sides.left[i]);
    }
    chain.push_back(sides.t);
    for (std::size_t k = 1; k < chain.size(); ++k) EXPECT_LT(s[chain[k - 1]].y, s[chain[k]].y);
    // Index order follows the chain.
    for (std::size_t k = 0; k < chain.size(); ++k) EXPECT_EQ(chain[k], k);
  }
}

TEST(KSwitchTree, Contract) {
  for (std::size_t n = 5; n <= 9; ++n) {
    for (std::size_t k = 2; k <= n - 1; ++k) {
      const Digraph t = gen_kswitch_tree(n, k);
      EXPECT_EQ(t.vertex_count(), 3 * n + 1);
      EXPECT_TRUE(is_tree(t));
      EXPECT_FALSE(is_switch_tree(t));
      EXPECT_EQ(longest_directed_path_length(t), k);
      const auto d = decompose_at(t, *t.index_of("r"));
      ASSERT_EQ(d.subtrees.size(), 3u);
      for (const auto& sub : d.subtrees) {
        EXPECT_EQ(sub.vertices.size(), n);
      }
    }
  }
  const Digraph t = gen_kswitch_tree(5, 2);
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"u3", "u2"}, {"u2", "u1"}, {"v1", "v2"}, {"v2", "v3"}, {"w1", "w2"}, {"w2", "w3"}}) {
    const Arc want{*t.index_of(a), *t.index_of(b)};
    EXPECT_NE(std::find(t.arcs().begin(), t.arcs().end(), want), t.arcs().end()) << a << "->" << b;
  }
  EXPECT_EQ(gen_kswitch_tree(5, 4).arcs(), gen_binucci_tree(5).arcs());
}

TEST(KSwitchTree, BadParameters) {
  EXPECT_EQ(kind_of([] { (void)gen_kswitch_tree(5, 1); }), ErrorKind::BadParameters);
  EXPECT_EQ(kind_of([] { (void)gen_kswitch_tree(5, 5); }), ErrorKind::BadParameters);
  EXPECT_EQ(kind_of([] { (void)gen_kswitch_tree(4, 2); }), ErrorKind::BadParameters);
}

TEST(Gadget, SizesAndGraph) {
  const auto g = gen_gadget(PartitionInstance{12, {4, 4, 4, 4, 4, 4}});
  EXPECT_EQ(g.points.size(), 28u);
  EXPECT_EQ(g.graph.vertex_count(), 28u);
  EXPECT_EQ(g.groups.size(), 2u);
  for (const auto& c : g.groups) EXPECT_EQ(c.size(), 13u);
  EXPECT_EQ(g.b_index, lowest_point(g.points));
  EXPECT_EQ(g.t_index, highest_point(g.points));
  EXPECT_EQ(sources_and_sinks(g.graph).sources.size(), 1u);
  EXPECT_TRUE(is_acyclic(g.graph));
  EXPECT_TRUE(check_gadget_properties(g).all());
}

TEST(Gadget, CoordinateSubstitution) {
  const auto g = gen_gadget(PartitionInstance{3, {1, 1, 1, 1, 1, 1}});
  const std::vector<Point> c2{P(-1, 1), P(-2, 4), P(-3, 9), P(-4, 16)};
  const std::vector<Point> c1{P(-6, -24), P(-7, -21), P(-8, -16), P(-9, -9)};
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_EQ(g.points[g.groups[1][j]], c2[j]);
    EXPECT_EQ(g.points[g.groups[0][j]], c1[j]);
  }
  EXPECT_EQ(g.points[g.t_index], P(0, 100));
  // y of b follows the closed form; x uses the m >= 3 evaluation.
  EXPECT_EQ(g.points[g.b_index], P(84, -84));
}

TEST(Gadget, MatchesClosedFormForLargeM) {
  const auto g = gen_gadget(ut::partition_for(12, 3));
  // b = (-(B+1)^2 + ((m-1)(B+2))^2, (B+1)^2 - (m(B+2))^2) with B = 12, m = 3.
  EXPECT_EQ(g.points[g.b_index], P(-169 + 784, 169 - 1764));
  EXPECT_EQ(g.points[g.t_index], P(0, 1764));
  for (std::size_t c = 0; c < 3; ++c) {
    const std::int64_t i = 2 - static_cast<std::int64_t>(c);
    for (std::int64_t j = 1; j <= 13; ++j) {
      EXPECT_EQ(g.points[g.groups[c][j - 1]], P(-j - 14 * i, j * j - 196 * i * i));
    }
  }
}

TEST(Gadget, InvalidInstances) {
  EXPECT_EQ(kind_of([] { (void)gen_gadget({4, {1, 1, 2}}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { (void)gen_gadget({12, {4, 4, 4, 4}}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { (void)gen_gadget({12, {}}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { (void)gen_gadget({12, {3, 4, 5}}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { (void)gen_gadget({12, {5, 5, 5}}); }), ErrorKind::InvalidInstance);
  EXPECT_EQ(kind_of([] { (void)gen_gadget({0, {1, 1, 1}}); }), ErrorKind::InvalidInstance);
}

TEST(Gadget, BreaksCollinearTriples) {
  // The closed form puts C_1 point 2, C_2 point 2 and C_3 point 6 on a line.
  const auto g = gen_gadget(PartitionInstance{6, {2, 2, 2, 2, 2, 2, 2, 2, 2}});
  EXPECT_TRUE(is_general_position(g.points));
  EXPECT_EQ(g.points[g.b_index], P(-49 + 256, 49 - 576));
  EXPECT_EQ(g.points[g.t_index], P(0, 576));
  EXPECT_EQ(g.points[g.groups[2][0]].x, Rational(-1));
  EXPECT_NE(g.points[g.groups[2][0]].y, Rational(1));
}

TEST(Gadget, PropertiesAcrossSizes) {
  for (std::int64_t B : {3, 6, 9, 12, 15, 20}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto g = gen_gadget(ut::partition_for(B, m));
      EXPECT_EQ(g.points.size(), m * static_cast<std::size_t>(B + 1) + 2);
      EXPECT_TRUE(is_general_position(g.points));
    }
  }
}

TEST(Reduction, ForwardExamples) {
  const auto g = gen_gadget(PartitionInstance{12, {4, 4, 4, 4, 4, 4}});
  const PartitionSolution sol{{{0, 1, 2}, {3, 4, 5}}};
  const Mapping m = solution_to_embedding(g, sol);
  EXPECT_TRUE(verify_upse(g.graph, g.points, m).empty());
  EXPECT_TRUE(ut::ref_is_upse(g.graph, g.points, m));
  EXPECT_EQ(m[*g.graph.index_of("s")], g.b_index);
  EXPECT_EQ(m[*g.graph.index_of("t")], g.t_index);

  const auto single = gen_gadget(PartitionInstance{9, {3, 3, 3}});
  EXPECT_TRUE(verify_upse(single.graph, single.points, solution_to_embedding(single, {{{2, 0, 1}}})).empty());
}

TEST(Reduction, InvalidSolutions) {
  const auto g = gen_gadget(PartitionInstance{15, {4, 5, 6, 4, 5, 6}});
  EXPECT_EQ(kind_of([&] { (void)solution_to_embedding(g, {{{0, 3, 1}, {2, 4, 5}}}); }), ErrorKind::InvalidSolution);
  EXPECT_EQ(kind_of([&] { (void)solution_to_embedding(g, {{{0, 1, 2}}}); }), ErrorKind::InvalidSolution);
  EXPECT_EQ(kind_of([&] { (void)solution_to_embedding(g, {{{0, 1, 2}, {0, 4, 5}}}); }), ErrorKind::InvalidSolution);
  EXPECT_EQ(kind_of([&] { (void)solution_to_embedding(g, {{{0, 1, 2}, {3, 4, 9}}}); }), ErrorKind::InvalidSolution);
}

TEST(Reduction, RoundTrip) {
  ut::Rng rng(2024);
  for (int round = 0; round < 30; ++round) {
    const auto planted = ut::random_partition(rng, 1 + round % 3, 24);
    const auto g = gen_gadget(planted.instance);
    const Mapping m = solution_to_embedding(g, planted.solution);
    ASSERT_TRUE(verify_upse(g.graph, g.points, m).empty());
    const auto back = embedding_to_solution(g, m);
    EXPECT_EQ(group_sizes(g.instance, back), group_sizes(g.instance, planted.solution));
  }
}

TEST(Reduction, BackwardRejectsInvalidMapping) {
  const auto g = gen_gadget(PartitionInstance{12, {4, 4, 4, 4, 4, 4}});
  Mapping m = solution_to_embedding(g, {{{0, 1, 2}, {3, 4, 5}}});
  std::swap(m.assignment[0], m.assignment[1]);  // s above t
  EXPECT_EQ(kind_of([&] { (void)embedding_to_solution(g, m); }), ErrorKind::NotAValidUPSE);
}

TEST(Reduction, SolverFoundEmbeddingExtracts) {
  // Smallest gadget: B = 3, m = 1 (6 vertices).
  const auto g = gen_gadget(PartitionInstance{3, {1, 1, 1}});
  const auto r = decide_upse(g.graph, g.points);
  ASSERT_EQ(r.outcome, SolverOutcome::Embeddable);
  const auto sol = embedding_to_solution(g, *r.mapping);
  ASSERT_EQ(sol.sets.size(), 1u);
  std::int64_t sum = 0;
  for (std::size_t i : sol.sets[0]) sum += g.instance.A[i];
  EXPECT_EQ(sum, 3);

  // With m = 2 the search finds a drawing with t inside the top group.
  const auto g2 = gen_gadget(PartitionInstance{3, {1, 1, 1, 1, 1, 1}});
  const auto r2 = decide_upse(g2.graph, g2.points);
  ASSERT_EQ(r2.outcome, SolverOutcome::Embeddable);
  EXPECT_NE((*r2.mapping)[*g2.graph.index_of("t")], g2.t_index);
  for (const auto& t : embedding_to_solution(g2, *r2.mapping).sets) {
    EXPECT_EQ(g2.instance.A[t[0]] + g2.instance.A[t[1]] + g2.instance.A[t[2]], 3);
  }
}
