#include "upse/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "upse/error.hpp"

namespace upse::io {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
      fail(std::string(what) + " is out of range");
    }
    return v.get<std::int64_t>();
  }
  fail(std::string(what) + " must be an integer");
}

std::size_t as_index(const json& v, const char* what) {
  const std::int64_t i = as_int(v, what);
  if (i < 0) fail(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(i);
}

Rational as_rational(const json& v) {
  if (v.is_number_integer()) return Rational(as_int(v, "coordinate"));
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  fail("coordinate must be an integer or a \"p/q\" string");
}

ordered rational_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.str();
}

PointSet points_from(const json& doc) {
  const json& arr = field(doc, "points");
  if (!arr.is_array()) fail("\"points\" must be an array");
  std::vector<Point> pts;
  for (const json& p : arr) {
    if (!p.is_array() || p.size() != 2) fail("each point must be a pair [x, y]");
    pts.push_back({as_rational(p[0]), as_rational(p[1])});
  }
  try {
    return PointSet(std::move(pts));
  } catch (const Error& e) {
    fail(e.what());
  }
}

ordered points_doc(const PointSet& s) {
  ordered arr = ordered::array();
  for (const Point& p : s) arr.push_back(ordered::array({rational_json(p.x), rational_json(p.y)}));
  return ordered{{"points", arr}};
}

Digraph graph_from(const json& doc) {
  const json& vs = field(doc, "vertices");
  const json& as = field(doc, "arcs");
  if (!vs.is_array() || !as.is_array()) fail("\"vertices\" and \"arcs\" must be arrays");
  std::vector<std::string> labels;
  for (const json& v : vs) {
    if (!v.is_string()) fail("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const json& a : as) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string()) {
      fail("each arc must be a pair of vertex labels");
    }
    arcs.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
  }
  try {
    return Digraph::from_labels(std::move(labels), arcs);
  } catch (const Error& e) {
    fail(e.what());
  }
}

ordered graph_doc(const Digraph& g) {
  ordered arcs = ordered::array();
  for (const Arc& a : g.arcs()) arcs.push_back(ordered::array({g.label(a.tail), g.label(a.head)}));
  return ordered{{"vertices", g.labels()}, {"arcs", arcs}};
}

ordered mapping_doc(const Digraph& g, const Mapping& m) {
  ordered obj = ordered::object();
  for (std::size_t v = 0; v < m.size(); ++v) obj[g.label(v)] = m[v];
  return obj;
}

// One top-level key per line and one array element per line; everything
// deeper stays compact so point lists remain diffable.
std::string dump(const ordered& doc) {
  std::string out = "{";
  bool first_key = true;
  for (const auto& [key, value] : doc.items()) {
    out += first_key ? "\n  " : ",\n  ";
    first_key = false;
    out += ordered(key).dump() + ": ";
    if (value.is_array() && !value.empty()) {
      out += "[";
      bool first = true;
      for (const auto& item : value) {
        out += first ? "\n    " : ",\n    ";
        first = false;
        out += item.dump();
      }
      out += "\n  ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

}  // namespace

PointSet parse_points(std::string_view text) { return points_from(parse_json(text)); }

std::string points_to_json(const PointSet& s) { return dump(points_doc(s)); }

Digraph parse_graph(std::string_view text) { return graph_from(parse_json(text)); }

std::string graph_to_json(const Digraph& g) { return dump(graph_doc(g)); }

Mapping parse_mapping(std::string_view text, const Digraph& g) {
  const json doc = parse_json(text);
  const json& obj = field(doc, "mapping");
  if (!obj.is_object()) fail("\"mapping\" must be an object");
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  Mapping m;
  m.assignment.assign(g.vertex_count(), kUnset);
  for (const auto& [label, idx] : obj.items()) {
    const auto v = g.index_of(label);
    if (!v) throw Error(ErrorKind::InvalidMapping, "mapping names unknown vertex '" + label + "'");
    m.assignment[*v] = as_index(idx, "point index");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (m.assignment[v] == kUnset) {
      throw Error(ErrorKind::InvalidMapping, "mapping omits vertex '" + g.label(v) + "'");
    }
  }
  return m;
}

std::string mapping_to_json(const Digraph& g, const Mapping& m) {
  return dump(ordered{{"mapping", mapping_doc(g, m)}});
}

std::string solver_result_to_json(const Digraph& g, const SolverResult& r) {
  ordered doc{{"result", std::string(to_string(r.outcome))}};
  if (r.mapping) doc["mapping"] = mapping_doc(g, *r.mapping);
  doc["nodes_explored"] = r.nodes_explored;
  return dump(doc);
}

GadgetInstance parse_bundle(std::string_view text) {
  const json doc = parse_json(text);
  const json& inst = field(doc, "instance");
  GadgetInstance g;
  g.instance.B = as_int(field(inst, "B"), "B");
  const json& items = field(inst, "A");
  if (!items.is_array()) fail("\"A\" must be an array");
  for (const json& a : items) g.instance.A.push_back(as_int(a, "item"));
  g.graph = graph_from(field(doc, "graph"));
  g.points = points_from(field(doc, "points"));
  const json& groups = field(doc, "groups");
  if (!groups.is_array()) fail("\"groups\" must be an array");
  for (const json& grp : groups) {
    if (!grp.is_array()) fail("each group must be an array of point indices");
    std::vector<std::size_t> idx;
    for (const json& p : grp) {
      idx.push_back(as_index(p, "group point index"));
      if (idx.back() >= g.points.size()) fail("group point index out of range");
    }
    g.groups.push_back(std::move(idx));
  }
  g.b_index = as_index(field(doc, "b"), "b");
  g.t_index = as_index(field(doc, "t"), "t");
  if (g.b_index >= g.points.size() || g.t_index >= g.points.size()) fail("b or t index out of range");
  return g;
}

std::string bundle_to_json(const GadgetInstance& g) {
  ordered doc;
  doc["instance"] = ordered{{"B", g.instance.B}, {"A", g.instance.A}};
  doc["graph"] = graph_doc(g.graph);
  doc["points"] = points_doc(g.points);
  doc["groups"] = g.groups;
  doc["b"] = g.b_index;
  doc["t"] = g.t_index;
  return dump(doc);
}

std::string violations_to_json(const Digraph& g, const std::vector<Violation>& violations) {
  ordered arr = ordered::array();
  for (const Violation& v : violations) {
    ordered item{{"kind", std::string(to_string(v.kind))}};
    ordered vs = ordered::array();
    for (std::size_t x : v.vertices) vs.push_back(g.label(x));
    ordered as = ordered::array();
    for (std::size_t a : v.arcs) {
      as.push_back(ordered::array({g.label(g.arcs()[a].tail), g.label(g.arcs()[a].head)}));
    }
    item["vertices"] = vs;
    item["arcs"] = as;
    arr.push_back(item);
  }
  return arr.dump();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
}

}  // namespace upse::io
