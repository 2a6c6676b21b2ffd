#include <gtest/gtest.h>

#include <chrono>

#include "oracles.hpp"
#include "upse/checker.hpp"
#include "upse/embedder.hpp"
#include "upse/error.hpp"

using namespace upse;
namespace ut = upse::testing;

namespace {

Point P(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

Digraph make(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> arcs) {
  return Digraph::from_labels(std::move(labels), arcs);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no upse::Error thrown";
  return ErrorKind::InvalidArgument;
}

Digraph random_switch_tree(ut::Rng& rng, std::size_t n) {
  return ut::orient_as_switch_tree(n, ut::random_tree_edges(rng, n), static_cast<int>(rng() % 2));
}

// Every subtree at every vertex sits on consecutive hull points.
void expect_consecutive(const Digraph& t, const PointSet& s, const Mapping& m) {
  if (s.size() < 3) return;
  const auto edges = ut::ref_hull_edges(s);
  for (std::size_t u = 0; u < t.vertex_count(); ++u) {
    for (const auto& sub : decompose_at(t, u).subtrees) {
      std::vector<std::size_t> pts;
      for (std::size_t v : sub.vertices) pts.push_back(m[v]);
      EXPECT_TRUE(ut::ref_consecutive(pts, edges, s.size()));
    }
  }
}

}  // namespace

TEST(OneSidedSink, Examples) {
  const Digraph single = make({"r"}, {});
  EXPECT_EQ(embed_one_sided_sink(single, 0, PointSet{P(3, 3)}).assignment, (std::vector<std::size_t>{0}));

  const Digraph arc = make({"a", "r"}, {{"a", "r"}});
  const PointSet two{P(5, 9), P(0, 1)};
  EXPECT_EQ(embed_one_sided_sink(arc, 1, two).assignment, (std::vector<std::size_t>{1, 0}));

  const Digraph in_star = make({"r", "a", "b", "c"}, {{"a", "r"}, {"b", "r"}, {"c", "r"}});
  const PointSet left{P(0, 0), P(-1, 1), P(-2, 4), P(-3, 9)};
  const Mapping m = embed_one_sided_sink(in_star, 0, left);
  EXPECT_EQ(m[0], 3u);
  EXPECT_TRUE(verify_upse(in_star, left, m).empty());
  EXPECT_TRUE(ut::ref_is_upse(in_star, left, m));
}

TEST(OneSidedSource, Examples) {
  const Digraph arc = make({"r", "a"}, {{"r", "a"}});
  const PointSet two{P(5, 9), P(0, 1)};
  EXPECT_EQ(embed_one_sided_source(arc, 0, two)[0], 1u);

  const Digraph out_star = make({"r", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"r", "c"}});
  const PointSet right{P(0, 0), P(1, 1), P(2, 4), P(3, 9)};
  const Mapping m = embed_one_sided_source(out_star, 0, right);
  EXPECT_EQ(m[0], 0u);
  EXPECT_TRUE(ut::ref_is_upse(out_star, right, m));
}

TEST(OneSided, Errors) {
  const Digraph arc = make({"a", "r"}, {{"a", "r"}});
  const PointSet two{P(0, 0), P(1, 1)};
  EXPECT_EQ(kind_of([&] { (void)embed_one_sided_sink(arc, 0, two); }), ErrorKind::NotSink);
  EXPECT_EQ(kind_of([&] { (void)embed_one_sided_source(arc, 1, two); }), ErrorKind::NotSource);
  EXPECT_EQ(kind_of([&] { (void)embed_one_sided_sink(arc, 1, PointSet{P(0, 0)}); }), ErrorKind::SizeMismatch);
  const Digraph path = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(kind_of([&] { (void)embed_one_sided_sink(path, 2, PointSet{P(0, 0), P(1, 1), P(0, 3)}); }),
            ErrorKind::NotSwitchTree);
  const Digraph star = make({"r", "a", "b", "c"}, {{"a", "r"}, {"b", "r"}, {"c", "r"}});
  const PointSet diamond{P(0, -2), P(1, 0), P(0, 3), P(-1, 1)};
  EXPECT_EQ(kind_of([&] { (void)embed_one_sided_sink(star, 0, diamond); }), ErrorKind::NotOneSided);
}

TEST(ConvexSink, DoubleStar) {
  // Sink r with sources x, y; x also feeds sinks x1, x2.
  const Digraph t = make({"r", "x", "y", "x1", "x2"}, {{"x", "r"}, {"y", "r"}, {"x", "x1"}, {"x", "x2"}});
  const PointSet s{P(0, -5), P(4, -1), P(3, 3), P(-1, 6), P(-4, 1)};
  ASSERT_EQ(is_one_sided(s), Sidedness::TwoSided);
  const Mapping m = embed_convex_sink(t, 0, s);
  EXPECT_EQ(m[0], highest_point(s));
  EXPECT_TRUE(ut::ref_is_upse(t, s, m));
}

TEST(ConvexSink, OneSidedAgreesWithLemma) {
  ut::Rng rng(1);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + round % 12;
    const PointSet s = ut::random_one_sided_set(rng, n, round % 2 == 0);
    const Digraph t = random_switch_tree(rng, n);
    const auto sinks = sources_and_sinks(t).sinks;
    const std::size_t r = sinks[rng() % sinks.size()];
    const Mapping m = embed_convex_sink(t, r, s);
    EXPECT_EQ(m[r], highest_point(s));
    EXPECT_TRUE(verify_upse(t, s, m).empty());
  }
}

TEST(ConvexSink, Errors) {
  const Digraph t = make({"r", "a", "b"}, {{"a", "r"}, {"b", "r"}});
  EXPECT_EQ(kind_of([&] { (void)embed_convex_sink(t, 1, PointSet{P(0, 0), P(2, 1), P(1, 3)}); }),
            ErrorKind::NotSink);
  EXPECT_EQ(kind_of([&] { (void)embed_convex_sink(t, 0, PointSet{P(0, 0), P(2, 1)}); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([&] { (void)embed_convex_sink(t, 0, PointSet{P(0, 0), P(2, 0), P(1, 3)}); }),
            ErrorKind::NotGeneralPosition);
  const Digraph t4 = make({"r", "a", "b", "c"}, {{"a", "r"}, {"b", "r"}, {"c", "r"}});
  EXPECT_EQ(kind_of([&] { (void)embed_convex_sink(t4, 0, PointSet{P(0, 0), P(6, 1), P(1, 5), P(2, 2)}); }),
            ErrorKind::NotConvex);
}

TEST(SwitchTree, RandomNineVertexTrees) {
  ut::Rng rng(9);
  for (int round = 0; round < 300; ++round) {
    const PointSet s = ut::random_convex_set(rng, 9);
    const Digraph t = random_switch_tree(rng, 9);
    const Mapping m = embed_switch_tree(t, s);
    EXPECT_TRUE(ut::ref_is_upse(t, s, m));
    expect_consecutive(t, s, m);
  }
}

TEST(SwitchTree, ResidualSourceTakesAnEndOfItsRun) {
  // After x1 takes the top, the run left for x0 is (L, B, R) with R higher
  // than L. x0 must sit at L; at B its arc to x1 would cut x2 -> x3.
  const Digraph t = make({"x0", "x1", "x2", "x3"}, {{"x0", "x1"}, {"x0", "x3"}, {"x2", "x3"}});
  const PointSet s{P(-1, 10), P(3, 3), P(0, -10), P(-2, -9)};
  const Mapping m = embed_switch_tree(t, s);
  EXPECT_EQ(m[1], 0u);
  EXPECT_EQ(m[0], 3u);
  EXPECT_TRUE(verify_upse(t, s, m).empty());
}

TEST(SwitchTree, EverySinkAsRoot) {
  ut::Rng rng(23);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + round % 14;
    const PointSet s = ut::random_convex_set(rng, n);
    const Digraph t = random_switch_tree(rng, n);
    for (std::size_t r : sources_and_sinks(t).sinks) {
      const Mapping m = embed_convex_sink(t, r, s);
      EXPECT_EQ(m[r], highest_point(s));
      EXPECT_TRUE(ut::ref_is_upse(t, s, m));
    }
  }
}

TEST(SwitchTree, SingleArc) {
  const Digraph arc = make({"a", "b"}, {{"a", "b"}});
  const PointSet s{P(10, 4), P(-3, -7)};
  EXPECT_TRUE(verify_upse(arc, s, embed_switch_tree(arc, s)).empty());
}

TEST(SwitchTree, HundredVerticesUnderASecond) {
  ut::Rng rng(100);
  const PointSet s = ut::random_convex_set(rng, 100);
  const Digraph t = random_switch_tree(rng, 100);
  const auto start = std::chrono::steady_clock::now();
  const Mapping m = embed_switch_tree(t, s);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 1.0);
  EXPECT_TRUE(verify_upse(t, s, m).empty());
}

TEST(SwitchTree, ReflectionDuality) {
  // Reflecting S in y and reversing T turns the sink problem into the source one.
  ut::Rng rng(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + round % 10;
    const PointSet s = ut::random_one_sided_set(rng, n, round % 2 == 1);
    const Digraph t = random_switch_tree(rng, n);
    const std::size_t r = sources_and_sinks(t).sinks.front();
    std::vector<Point> flipped;
    for (const Point& p : s) flipped.push_back({p.x, -p.y});
    const PointSet fs(flipped);
    const Digraph rt = t.reversed();
    const Mapping sink = embed_one_sided_sink(t, r, s);
    const Mapping source = embed_one_sided_source(rt, r, fs);
    EXPECT_TRUE(verify_upse(t, s, sink).empty());
    EXPECT_TRUE(verify_upse(rt, fs, source).empty());
    EXPECT_TRUE(verify_upse(t, s, source).empty());
    EXPECT_EQ(source[r], lowest_point(fs));
  }
}
