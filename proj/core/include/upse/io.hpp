#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "upse/checker.hpp"
#include "upse/constructions.hpp"
#include "upse/digraph.hpp"
#include "upse/geometry.hpp"
#include "upse/mapping.hpp"

namespace upse::io {

// JSON readers and writers for every file the toolkit exchanges. Coordinates
// are JSON integers or "p/q" strings in lowest terms. All readers throw
// Error(ParseError) on malformed input.

/// {"points": [[x, y], ...]}
PointSet parse_points(std::string_view json);
std::string points_to_json(const PointSet& s);

/// {"vertices": [...], "arcs": [[tail, head], ...]}
Digraph parse_graph(std::string_view json);
std::string graph_to_json(const Digraph& g);

/// {"mapping": {"label": pointIndex, ...}}. Unknown or missing labels throw
/// Error(InvalidMapping). Point indices are range-checked by the consumer.
Mapping parse_mapping(std::string_view json, const Digraph& g);
std::string mapping_to_json(const Digraph& g, const Mapping& m);

/// {"result": ..., "mapping": {...}?, "nodes_explored": n}
std::string solver_result_to_json(const Digraph& g, const SolverResult& r);

/// {"instance": {"B": .., "A": [..]}, "graph": .., "points": .., "groups": [[..]..], "b": i, "t": j}
GadgetInstance parse_bundle(std::string_view json);
std::string bundle_to_json(const GadgetInstance& g);

/// [{"kind": .., "vertices": [labels], "arcs": [[tail, head], ...]}, ...]
std::string violations_to_json(const Digraph& g, const std::vector<Violation>& violations);

/// Throws Error(ParseError) when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
/// Throws Error(InvalidArgument) when the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace upse::io
