#include <gtest/gtest.h>

#include "upse/constructions.hpp"
#include "upse/error.hpp"
#include "upse/io.hpp"

using namespace upse;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no upse::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(PointsJson, RoundTrip) {
  const PointSet s = gen_binucci_pointset(5);
  const std::string text = io::points_to_json(s);
  EXPECT_EQ(io::parse_points(text).points(), s.points());
  EXPECT_NE(text.find("\"28/197\""), std::string::npos);
}

TEST(PointsJson, Parse) {
  const PointSet s = io::parse_points(R"({"points": [[1, "-3/4"], ["5", 2]]})");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].y, Rational::from_fraction(-3, 4));
  EXPECT_EQ(s[1].x, Rational(5));
}

TEST(PointsJson, RejectsMalformed) {
  for (const char* bad : {R"({"points": [[1, "1/0"]]})", R"({"points": [[1, "2/4"]]})", R"({"points": [[1.5, 2]]})",
                          R"({"points": [[1]]})", R"({"pts": []})", R"({"points": [[0,0],[0,0]]})", "not json",
                          R"({"points": [[1, true]]})"}) {
    EXPECT_EQ(kind_of([&] { (void)io::parse_points(bad); }), ErrorKind::ParseError) << bad;
  }
}

TEST(GraphJson, RoundTrip) {
  const Digraph g = gen_kswitch_tree(5, 3);
  const Digraph back = io::parse_graph(io::graph_to_json(g));
  EXPECT_EQ(back.labels(), g.labels());
  EXPECT_EQ(back.arcs(), g.arcs());
}

TEST(GraphJson, RejectsMalformed) {
  for (const char* bad : {R"({"vertices": ["a"], "arcs": [["a", "b"]]})", R"({"vertices": ["a", "a"], "arcs": []})",
                          R"({"vertices": ["a", "b"], "arcs": [["a", "b"], ["a", "b"]]})",
                          R"({"vertices": [1], "arcs": []})", R"({"vertices": ["a"]})",
                          R"({"vertices": ["a"], "arcs": [["a", "a"]]})"}) {
    EXPECT_EQ(kind_of([&] { (void)io::parse_graph(bad); }), ErrorKind::ParseError) << bad;
  }
}

TEST(MappingJson, RoundTrip) {
  const Digraph g = io::parse_graph(R"({"vertices": ["x", "y"], "arcs": [["x", "y"]]})");
  const Mapping m{{1, 0}};
  EXPECT_EQ(io::parse_mapping(io::mapping_to_json(g, m), g), m);
}

TEST(MappingJson, Errors) {
  const Digraph g = io::parse_graph(R"({"vertices": ["x", "y"], "arcs": []})");
  EXPECT_EQ(kind_of([&] { (void)io::parse_mapping(R"({"mapping": {"x": 0}})", g); }), ErrorKind::InvalidMapping);
  EXPECT_EQ(kind_of([&] { (void)io::parse_mapping(R"({"mapping": {"x": 0, "y": 1, "z": 2}})", g); }),
            ErrorKind::InvalidMapping);
  EXPECT_EQ(kind_of([&] { (void)io::parse_mapping(R"({"mapping": {"x": -1, "y": 1}})", g); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { (void)io::parse_mapping(R"({"map": {}})", g); }), ErrorKind::ParseError);
}

TEST(BundleJson, RoundTrip) {
  const auto g = gen_gadget(PartitionInstance{12, {4, 4, 4, 4, 4, 4}});
  const auto back = io::parse_bundle(io::bundle_to_json(g));
  EXPECT_EQ(back.instance.B, 12);
  EXPECT_EQ(back.instance.A, g.instance.A);
  EXPECT_EQ(back.graph.arcs(), g.graph.arcs());
  EXPECT_EQ(back.points.points(), g.points.points());
  EXPECT_EQ(back.groups, g.groups);
  EXPECT_EQ(back.b_index, g.b_index);
  EXPECT_EQ(back.t_index, g.t_index);
}

TEST(SolverResultJson, Shape) {
  const Digraph g = io::parse_graph(R"({"vertices": ["x", "y"], "arcs": [["x", "y"]]})");
  SolverResult r;
  r.outcome = SolverOutcome::Embeddable;
  r.mapping = Mapping{{0, 1}};
  r.nodes_explored = 2;
  const std::string text = io::solver_result_to_json(g, r);
  EXPECT_NE(text.find("\"result\": \"embeddable\""), std::string::npos);
  EXPECT_NE(text.find("\"nodes_explored\": 2"), std::string::npos);
  EXPECT_NE(text.find("\"y\":1"), std::string::npos);
}

TEST(Files, ReadMissing) {
  EXPECT_EQ(kind_of([] { (void)io::read_file("/nonexistent/file.json"); }), ErrorKind::ParseError);
}
