#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "upse/digraph.hpp"
#include "upse/geometry.hpp"
#include "upse/mapping.hpp"

namespace upse {

enum class ViolationKind { NotInjective, ArcNotUpward, ArcsCross, VertexOnArc };

std::string_view to_string(ViolationKind kind);

/// A concrete reason a mapping is not an upward planar straight-line
/// embedding. Witnesses by kind:
///   NotInjective  vertices = all vertices sharing one point
///   ArcNotUpward  arcs = {the arc}
///   ArcsCross     arcs = {first, second}
///   VertexOnArc   vertices = {the vertex}, arcs = {the arc}
struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> arcs;  // arc indices into Digraph::arcs()
};

/// Empty result means the mapping is an UPSE. Throws Error(SizeMismatch)
/// when |S| != |V| or the mapping does not cover V, Error(InvalidMapping)
/// for point indices out of range, Error(NotGeneralPosition).
std::vector<Violation> verify_upse(const Digraph& g, const PointSet& s, const Mapping& m);

struct SolverOptions {
  /// Reject partial assignments where a component of T - u cannot end up on
  /// consecutive hull points. Only takes effect for trees on convex sets.
  bool use_consecutive_pruning = false;
  std::optional<std::uint64_t> node_budget;
};

enum class SolverOutcome { Embeddable, NotEmbeddable, BudgetExhausted };

std::string_view to_string(SolverOutcome outcome);

struct SolverResult {
  SolverOutcome outcome = SolverOutcome::NotEmbeddable;
  std::optional<Mapping> mapping;  // set iff Embeddable
  std::uint64_t nodes_explored = 0;
  bool pruning_applied = false;
};

/// Exact decision by backtracking: points are consumed bottom-to-top and
/// each is given to some vertex whose in-neighbors are all placed, with
/// incremental crossing checks. NotEmbeddable is only reported after a
/// complete search. Throws Error(Cyclic), Error(SizeMismatch),
/// Error(NotGeneralPosition).
SolverResult decide_upse(const Digraph& g, const PointSet& s, const SolverOptions& opts = {});

}  // namespace upse
